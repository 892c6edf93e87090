package shapes;

public class Square implements Shape {
    double side = 2.0;

    @Override
    public void accept(ShapeVisitor visitor) {
        visitor.visitSquare(this);
    }
}
