"""Data assets."""

from __future__ import annotations

from pathlib import Path


def get_catalog_path() -> Path | None:
    path = Path(__file__).with_name("catalog.json")
    if path.exists():
        return path
    return None


__all__ = ["get_catalog_path"]
