package list;

public class Node {
    private final int value;
    private Node next;

    public Node(int value, Node next) {
        this.value = value;
        this.next = next;
    }

    public int sum() {
        return next == null ? value : value + next.sum();
    }

    public Node prepend(int v) {
        return new Node(v, this);
    }
}
