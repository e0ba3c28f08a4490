import pytest


@pytest.fixture(autouse=True)
def isolated_config(monkeypatch, tmp_path):
    """Point the CLI at an empty config dir and clear NASHCONE_* overrides."""
    monkeypatch.setenv("XDG_CONFIG_HOME", str(tmp_path / "config"))
    monkeypatch.setenv("APPDATA", str(tmp_path / "config"))
    for key in ("NASHCONE_FORMAT", "NASHCONE_SCAN_WORKERS", "NASHCONE_BRUTE_BOUND"):
        monkeypatch.delenv(key, raising=False)
    return tmp_path / "config" / "nashcone"
