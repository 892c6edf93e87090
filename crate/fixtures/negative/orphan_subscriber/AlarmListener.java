package alarm;

public interface AlarmListener {
    void onAlarm(String reason);
}
