package abstractfactory;

public class ProductA2 extends AbstractProductA {
    public String usefulFunctionA() {
        return "The result of the product A2.";
    }
}
