"""Tests for environment-driven settings."""

import pytest
from pydantic import ValidationError

from siclie.config import BUNDLED_DATA_DIR, Settings


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("SIC_DATA_DIR", "SIC_TOL", "SIC_FILE_TOL", "SIC_WORKERS", "SIC_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setattr("siclie.config.settings.load_dotenv", lambda: None)
    return monkeypatch


def test_defaults(clean_env):
    settings = Settings.from_env()
    assert settings.data_dir == BUNDLED_DATA_DIR
    assert settings.tol == 1e-9
    assert settings.file_tol == 1e-10
    assert settings.workers is None
    assert settings.log_level == "INFO"


def test_environment_overrides(clean_env, tmp_path):
    clean_env.setenv("SIC_DATA_DIR", str(tmp_path))
    clean_env.setenv("SIC_TOL", "1e-7")
    clean_env.setenv("SIC_WORKERS", "3")
    clean_env.setenv("SIC_LOG_LEVEL", "debug")
    settings = Settings.from_env()
    assert settings.data_dir == tmp_path
    assert settings.tol == 1e-7
    assert settings.workers == 3
    assert settings.log_level == "DEBUG"


@pytest.mark.parametrize(
    "name,value",
    [("SIC_TOL", "-1"), ("SIC_WORKERS", "0"), ("SIC_LOG_LEVEL", "LOUD")],
)
def test_invalid_values(clean_env, name, value):
    clean_env.setenv(name, value)
    with pytest.raises(ValidationError):
        Settings.from_env()


@pytest.mark.parametrize("d", range(2, 8))
def test_bundled_data_present(d):
    assert (BUNDLED_DATA_DIR / f"d{d}.txt").exists()
