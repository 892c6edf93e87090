package visitor;

public class ComputerPartPrinter implements ComputerPartVisitor {
    @Override
    public void visit(ComputerPart part) {
        System.out.println("Displaying " + part);
    }
}
