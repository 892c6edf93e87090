package abstract_factory;

public interface GUIFactory {
    Button createButton();
    CheckBox createCheckBox();
}
