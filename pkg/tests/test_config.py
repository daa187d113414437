import pytest

from config.configurations import ConfigError, load_config


class TestLoadConfig:
    def test_defaults(self, monkeypatch):
        for key in ("SIM_DT", "SIM_SAMPLE_EVERY", "SIM_WORKERS", "SIM_CSV_DIGITS"):
            monkeypatch.delenv(key, raising=False)
        config = load_config()
        assert config.integration.dt == pytest.approx(1e-3)
        assert config.integration.sample_every == 10
        assert config.integration.event_tolerance == pytest.approx(1e-4)
        assert config.tolerances.psd == pytest.approx(1e-8)
        assert config.output.csv_digits == 12
        assert config.runtime.workers == 1

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("SIM_DT", "5e-4")
        monkeypatch.setenv("SIM_WORKERS", "4")
        monkeypatch.setenv("SIM_OUT_DIR", "elsewhere")
        config = load_config()
        assert config.integration.dt == pytest.approx(5e-4)
        assert config.runtime.workers == 4
        assert config.output.out_dir == "elsewhere"

    def test_cached(self):
        assert load_config() is load_config()

    @pytest.mark.parametrize(
        "key, value",
        [
            ("SIM_DT", "fast"),
            ("SIM_DT", "-1"),
            ("SIM_SAMPLE_EVERY", "0"),
            ("SIM_TOL_PSD", "0"),
            ("SIM_WORKERS", "0"),
        ],
    )
    def test_bad_values(self, monkeypatch, key, value):
        monkeypatch.setenv(key, value)
        with pytest.raises(ConfigError):
            load_config()
