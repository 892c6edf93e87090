package app;

public class Mailer {
    public void send(String to) {
        System.out.println("mail " + to);
    }
}
