package shapes;

public class Circle implements Shape {
    double radius = 1.0;

    @Override
    public void accept(ShapeVisitor visitor) {
        visitor.visitCircle(this);
    }
}
