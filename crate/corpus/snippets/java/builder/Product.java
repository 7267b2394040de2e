package builder;

import java.util.ArrayList;
import java.util.List;

public class Product {
    private final List<String> parts = new ArrayList<>();

    public void add(String part) {
        parts.add(part);
    }

    public String listParts() {
        return "Product parts: " + String.join(", ", parts);
    }
}
