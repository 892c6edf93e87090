package factory_method;

public class WindowsButton implements Button {
    public void render() {
        System.out.println("Windows button");
        onClick();
    }

    public void onClick() {
        System.out.println("Click! Windows button");
    }
}
