package shapes;

public interface Shape {
    void accept(ShapeVisitor visitor);
}
