package alarm;

import java.util.ArrayList;
import java.util.List;

public class Alarm {
    private List<AlarmListener> listeners = new ArrayList<>();

    public void register(AlarmListener l) {
        listeners.add(l);
    }

    public void raise(String reason) {
        for (AlarmListener l : listeners) {
            l.onAlarm(reason);
        }
    }
}
