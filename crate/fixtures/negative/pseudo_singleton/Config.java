package config;

public class Config {
    private static Config shared;

    public Config() {
    }

    public static Config getInstance() {
        if (shared == null) {
            shared = new Config();
        }
        return shared;
    }
}
