package command;

public class ComplexCommand implements Command {
    private Receiver receiver;
    private String a;
    private String b;

    public ComplexCommand(Receiver receiver, String a, String b) {
        this.receiver = receiver;
        this.a = a;
        this.b = b;
    }

    public void execute() {
        System.out.println("ComplexCommand: Complex stuff should be done by a receiver object.");
        receiver.doSomething(a);
        receiver.doSomethingElse(b);
    }
}
