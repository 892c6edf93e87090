package render;

public interface Renderer {
    String render(String text);
}
