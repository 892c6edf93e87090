package shapes;

public interface ShapeVisitor {
    void visitCircle(Circle circle);

    void visitSquare(Square square);
}
