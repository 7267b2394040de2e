package visitor;

public class ConcreteVisitor1 implements Visitor {
    public void visitConcreteElementA(ConcreteElementA element) {
        System.out.println(element.exclusiveMethodOfConcreteElementA() + " + ConcreteVisitor1");
    }

    public void visitConcreteElementB(ConcreteElementB element) {
        System.out.println(element.specialMethodOfConcreteElementB() + " + ConcreteVisitor1");
    }
}
