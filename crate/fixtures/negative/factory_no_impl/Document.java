package docs;

public interface Document {
    void open();
}
