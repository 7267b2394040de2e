package command;

public class Invoker {
    private Command onStart;
    private Command onFinish;

    public void setOnStart(Command command) {
        onStart = command;
    }

    public void setOnFinish(Command command) {
        onFinish = command;
    }

    public void doSomethingImportant() {
        if (onStart != null) {
            onStart.execute();
        }
        System.out.println("Invoker: ...doing something really important...");
        if (onFinish != null) {
            onFinish.execute();
        }
    }
}
