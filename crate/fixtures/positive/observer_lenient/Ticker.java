package market;

import java.util.ArrayList;
import java.util.List;

public class Ticker {
    private final List<PriceListener> listeners = new ArrayList<>();

    public void addListener(PriceListener listener) {
        listeners.add(listener);
    }

    public void publish(String symbol, double price) {
        for (PriceListener l : listeners) {
            l.priceChanged(symbol, price);
        }
    }
}
