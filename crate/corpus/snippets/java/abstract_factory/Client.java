package abstractfactory;

public class Client {
    private static void clientCode(AbstractFactory factory) {
        AbstractProductA productA = factory.createProductA();
        AbstractProductB productB = factory.createProductB();
        System.out.println(productB.usefulFunctionB());
        System.out.println(productB.anotherUsefulFunctionB(productA));
    }

    public static void main(String[] args) {
        System.out.println("Client: Testing client code with the first factory type:");
        clientCode(new ConcreteFactory1());
        System.out.println("Client: Testing the same client code with the second factory type:");
        clientCode(new ConcreteFactory2());
    }
}
