"""Configuration management."""

from .settings import BUNDLED_DATA_DIR, Settings, get_settings

__all__ = ["BUNDLED_DATA_DIR", "Settings", "get_settings"]
