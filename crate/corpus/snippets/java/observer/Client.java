package observer;

public class Client {
    public static void main(String[] args) {
        ConcreteSubject subject = new ConcreteSubject();
        ConcreteObserver first = new ConcreteObserver(subject, "X");
        ConcreteObserver second = new ConcreteObserver(subject, "Y");
        subject.setState(1);
        second.stopObserving();
        subject.setState(2);
        first.stopObserving();
    }
}
