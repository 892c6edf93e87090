package factory_method;

public interface Button {
    void render();
    void onClick();
}
