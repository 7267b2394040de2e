package abstractfactory;

public interface AbstractFactory {
    AbstractProductA createProductA();
    AbstractProductB createProductB();
}
