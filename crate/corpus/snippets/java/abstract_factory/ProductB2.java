package abstractfactory;

public class ProductB2 implements AbstractProductB {
    public String usefulFunctionB() {
        return "The result of the product B2.";
    }

    public String anotherUsefulFunctionB(AbstractProductA collaborator) {
        String result = collaborator.usefulFunctionA();
        return "The result of the B2 collaborating with (" + result + ")";
    }
}
