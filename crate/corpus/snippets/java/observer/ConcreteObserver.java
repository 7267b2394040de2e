package observer;

public class ConcreteObserver implements Observer {
    private final String name;
    private ConcreteSubject subject;
    private int observedState;

    public ConcreteObserver(ConcreteSubject subject, String name) {
        this.subject = subject;
        this.name = name;
        subject.attach(this);
    }

    public void update() {
        observedState = subject.getState();
        System.out.println("Observer " + name + " sees state " + observedState);
    }

    public void stopObserving() {
        subject.detach(this);
    }
}
