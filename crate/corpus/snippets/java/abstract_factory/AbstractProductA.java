package abstractfactory;

public abstract class AbstractProductA {
    public abstract String usefulFunctionA();
}
