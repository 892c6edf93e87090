package memento;

import org.apache.hadoop.hdfs.server.namenode.INodeAttributeProvider;

public class DefaultINodeAttributesProvider extends INodeAttributeProvider {

    public void start() {
    }

    public void stop() {
    }

    public Attribute getAttributes(String[] pathElements, Attribute inodeAttributes) {
        return inodeAttributes;
    }
}
