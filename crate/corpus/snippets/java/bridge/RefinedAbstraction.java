package bridge;

public class RefinedAbstraction extends Abstraction {
    public RefinedAbstraction(Implementor implementor) {
        super(implementor);
    }

    public String operation() {
        return "Refined: extended operation with:\n" + delegate();
    }
}
