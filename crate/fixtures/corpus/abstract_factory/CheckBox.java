package abstract_factory;

public interface CheckBox {
    void paint();
}
