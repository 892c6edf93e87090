package handlers;

public interface Handler {
    void accept(String message);
}
