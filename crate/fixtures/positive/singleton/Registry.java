package registry;

import java.util.HashMap;
import java.util.Map;

public final class Registry {
    private static Registry instance;
    private final Map<String, String> entries = new HashMap<>();

    private Registry() {
    }

    public static Registry getInstance() {
        if (instance == null) {
            instance = new Registry();
        }
        return instance;
    }

    public void put(String key, String value) {
        entries.put(key, value);
    }

    public String get(String key) {
        return entries.get(key);
    }
}
