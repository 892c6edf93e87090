package render;

public class PlainRenderer implements Renderer {
    @Override
    public String render(String text) {
        return text;
    }
}
