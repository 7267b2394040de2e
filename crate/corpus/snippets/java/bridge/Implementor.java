package bridge;

public interface Implementor {
    String operationImplementation();
}
