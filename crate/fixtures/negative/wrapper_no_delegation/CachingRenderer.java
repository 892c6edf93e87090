package render;

public class CachingRenderer implements Renderer {
    private Renderer inner;
    private String last = "";

    public CachingRenderer(Renderer inner) {
        this.inner = inner;
    }

    @Override
    public String render(String text) {
        last = text.trim();
        return last;
    }
}
