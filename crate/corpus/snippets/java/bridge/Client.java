package bridge;

public class Client {
    static void clientCode(Abstraction abstraction) {
        System.out.println(abstraction.operation());
    }

    public static void main(String[] args) {
        clientCode(new RefinedAbstraction(new ConcreteImplementorA()));
        clientCode(new RefinedAbstraction(new ConcreteImplementorB()));
    }
}
