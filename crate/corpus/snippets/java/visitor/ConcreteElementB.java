package visitor;

public class ConcreteElementB implements Element {
    public void accept(Visitor visitor) {
        visitor.visitConcreteElementB(this);
    }

    public String specialMethodOfConcreteElementB() {
        return "B";
    }
}
