package command;

public class SimpleCommand implements Command {
    private final String payload;

    public SimpleCommand(String payload) {
        this.payload = payload;
    }

    public void execute() {
        System.out.println("SimpleCommand: See, I can do simple things like printing (" + payload + ")");
    }
}
