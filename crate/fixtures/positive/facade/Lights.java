package theater;

public class Lights {
    public void dim(int level) {
        System.out.println("Lights at " + level);
    }
}
