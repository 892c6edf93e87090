package abstract_factory.osx;

import abstract_factory.CheckBox;

public class MacOSCheckBox implements CheckBox {
    @Override
    public void paint() {
        System.out.println("You have created MacOSCheckBox.");
    }
}
