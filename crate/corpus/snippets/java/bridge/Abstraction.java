package bridge;

public abstract class Abstraction {
    protected Implementor implementor;

    protected Abstraction(Implementor implementor) {
        this.implementor = implementor;
    }

    public abstract String operation();

    protected String delegate() {
        return implementor.operationImplementation();
    }
}
