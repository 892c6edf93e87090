package abstract_factory;

public interface Button {
    void paint();
}
