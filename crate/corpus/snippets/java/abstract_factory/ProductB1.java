package abstractfactory;

public class ProductB1 implements AbstractProductB {
    public String usefulFunctionB() {
        return "The result of the product B1.";
    }

    public String anotherUsefulFunctionB(AbstractProductA collaborator) {
        String result = collaborator.usefulFunctionA();
        return "The result of the B1 collaborating with (" + result + ")";
    }
}
