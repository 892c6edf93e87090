package market;

public class ConsoleListener implements PriceListener {
    public void priceChanged(String symbol, double price) {
        System.out.println(symbol + " " + price);
    }
}
