package visitor;

public interface ComputerPartVisitor {
    public void visit(ComputerPart part);
}
