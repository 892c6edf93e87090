package abstract_factory.osx;

import abstract_factory.Button;
import abstract_factory.CheckBox;
import abstract_factory.GUIFactory;

public class MacOSFactory implements GUIFactory {
    @Override
    public Button createButton() {
        return new MacOSButton();
    }

    @Override
    public CheckBox createCheckBox() {
        return new MacOSCheckBox();
    }
}
