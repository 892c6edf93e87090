package handlers;

public class PrintHandler implements Handler {
    @Override
    public void accept(String message) {
        System.out.println(message);
    }
}
