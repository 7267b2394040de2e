package abstractfactory;

public interface AbstractProductB {
    String usefulFunctionB();
    String anotherUsefulFunctionB(AbstractProductA collaborator);
}
