package app;

public class Controller {
    private Mailer mailer = new Mailer();
    private Audit audit = new Audit();

    public void notifyUser(String user) {
        mailer.send(user);
    }

    public void log(String event) {
        audit.record(event);
    }
}
