package adapter;

public interface Car {
    void drive();
}
