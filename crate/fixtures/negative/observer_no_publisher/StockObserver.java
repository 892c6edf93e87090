package stock;

public interface StockObserver {
    void onChange(double price);
}
