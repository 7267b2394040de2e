package visitor;

public class Client {
    static void clientCode(Element[] elements, Visitor visitor) {
        for (Element element : elements) {
            element.accept(visitor);
        }
    }

    public static void main(String[] args) {
        Element[] elements = { new ConcreteElementA(), new ConcreteElementB() };
        clientCode(elements, new ConcreteVisitor1());
        clientCode(elements, new ConcreteVisitor2());
    }
}
