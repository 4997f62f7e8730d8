"""Partitions shipped with the package."""
from __future__ import annotations

import json
from importlib import resources

from .io import partition_from_doc

NAMES = ("ms_symmetric", "ms_generic", "triangle", "square", "square_diag", "square_cross", "frame")


def fixture_path(name: str):
    return resources.files("eeespline") / "data" / f"{name}.json"


def load_fixture(name: str):
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    return partition_from_doc(json.loads(fixture_path(name).read_text()))
