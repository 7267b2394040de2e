package builder;

public class Client {
    public static void main(String[] args) {
        Director director = new Director();
        ConcreteBuilder builder = new ConcreteBuilder();
        director.setBuilder(builder);
        director.buildMinimalViableProduct();
        System.out.println(builder.getProduct().listParts());
        director.buildFullFeaturedProduct();
        System.out.println(builder.getProduct().listParts());
    }
}
