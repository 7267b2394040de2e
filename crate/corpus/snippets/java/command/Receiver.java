package command;

public class Receiver {
    public void doSomething(String a) {
        System.out.println("Receiver: Working on (" + a + ".)");
    }

    public void doSomethingElse(String b) {
        System.out.println("Receiver: Also working on (" + b + ".)");
    }
}
