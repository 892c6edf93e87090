package shapes;

public class AreaVisitor implements ShapeVisitor {
    private double total;

    @Override
    public void visitCircle(Circle circle) {
        total += Math.PI * circle.radius * circle.radius;
    }

    @Override
    public void visitSquare(Square square) {
        total += square.side * square.side;
    }
}
