package stock;

public class PrintingObserver implements StockObserver {
    @Override
    public void onChange(double price) {
        System.out.println(price);
    }
}
