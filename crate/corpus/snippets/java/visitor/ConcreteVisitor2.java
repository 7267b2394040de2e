package visitor;

public class ConcreteVisitor2 implements Visitor {
    public void visitConcreteElementA(ConcreteElementA element) {
        System.out.println(element.exclusiveMethodOfConcreteElementA() + " + ConcreteVisitor2");
    }

    public void visitConcreteElementB(ConcreteElementB element) {
        System.out.println(element.specialMethodOfConcreteElementB() + " + ConcreteVisitor2");
    }
}
