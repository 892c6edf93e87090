package memento;

public class Attribute {
    private final String owner;
    private final String group;
    private final long modificationTime;

    Attribute(String owner, String group, long modificationTime) {
        this.owner = owner;
        this.group = group;
        this.modificationTime = modificationTime;
    }

    public String getOwner() {
        return owner;
    }

    public String getGroup() {
        return group;
    }

    public long getModificationTime() {
        return modificationTime;
    }
}
