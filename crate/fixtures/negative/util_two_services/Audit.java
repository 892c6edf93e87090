package app;

public class Audit {
    public void record(String event) {
        System.out.println("audit " + event);
    }
}
