package adapter;

public class Bus {
    public void run() {
        System.out.println("Bus is running");
    }
}
