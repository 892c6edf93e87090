package decorator;

public class FileDataSource implements DataSource {
    private String name;
    private String contents = "";

    public FileDataSource(String name) {
        this.name = name;
    }

    @Override
    public void writeData(String data) {
        contents = data;
    }

    @Override
    public String readData() {
        return contents;
    }
}
