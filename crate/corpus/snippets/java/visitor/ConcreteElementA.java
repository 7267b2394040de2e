package visitor;

public class ConcreteElementA implements Element {
    public void accept(Visitor visitor) {
        visitor.visitConcreteElementA(this);
    }

    public String exclusiveMethodOfConcreteElementA() {
        return "A";
    }
}
