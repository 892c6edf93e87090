package labels;

public abstract class LabelFactory {
    public abstract String createLabel();

    public void print() {
        System.out.println(createLabel());
    }
}
