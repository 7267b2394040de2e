package builder;

public interface Builder {
    void producePartA();
    void producePartB();
    void producePartC();
}
