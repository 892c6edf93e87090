package labels;

public class UpperLabelFactory extends LabelFactory {
    @Override
    public String createLabel() {
        return new String("LABEL");
    }
}
