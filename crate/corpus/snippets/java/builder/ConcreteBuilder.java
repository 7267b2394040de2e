package builder;

public class ConcreteBuilder implements Builder {
    private Product product;

    public ConcreteBuilder() {
        reset();
    }

    public void reset() {
        product = new Product();
    }

    public void producePartA() {
        product.add("PartA1");
    }

    public void producePartB() {
        product.add("PartB1");
    }

    public void producePartC() {
        product.add("PartC1");
    }

    public Product getProduct() {
        Product result = product;
        reset();
        return result;
    }
}
