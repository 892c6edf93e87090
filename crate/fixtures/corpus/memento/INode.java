package memento;

public class INode {
    private String owner;
    private String group;
    private long modificationTime;

    public void chown(String owner, String group) {
        this.owner = owner;
        this.group = group;
        this.modificationTime = System.currentTimeMillis();
    }

    public Attribute snapshot() {
        return new Attribute(owner, group, modificationTime);
    }

    public void restore(Attribute attribute) {
        this.owner = attribute.getOwner();
        this.group = attribute.getGroup();
        this.modificationTime = attribute.getModificationTime();
    }
}
