package bridge;

public class ConcreteImplementorB implements Implementor {
    public String operationImplementation() {
        return "ConcreteImplementorB: Here's the result on the platform B.";
    }
}
