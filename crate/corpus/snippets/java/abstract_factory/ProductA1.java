package abstractfactory;

public class ProductA1 extends AbstractProductA {
    public String usefulFunctionA() {
        return "The result of the product A1.";
    }
}
