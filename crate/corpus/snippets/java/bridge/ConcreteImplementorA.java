package bridge;

public class ConcreteImplementorA implements Implementor {
    public String operationImplementation() {
        return "ConcreteImplementorA: Here's the result on the platform A.";
    }
}
