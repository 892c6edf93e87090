package factory_method;

public abstract class Dialog {

    public void renderWindow() {
        Button okButton = createButton();
        System.out.println("Rendering dialog window");
    }

    public abstract Button createButton();
}
