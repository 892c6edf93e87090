package market;

public interface PriceListener {
    void priceChanged(String symbol, double price);
}
