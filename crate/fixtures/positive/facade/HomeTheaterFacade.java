package theater;

public class HomeTheaterFacade {
    private Amplifier amp;
    private Projector projector;
    private Lights lights;

    public HomeTheaterFacade(Amplifier amp, Projector projector, Lights lights) {
        this.amp = amp;
        this.projector = projector;
        this.lights = lights;
    }

    public void watchMovie(String movie) {
        lights.dim(10);
        projector.on();
        projector.wideScreenMode();
        amp.on();
        amp.setVolume(5);
    }
}
