"""Exact Hopf algebroid checks over Q(i)."""

import json
import os

from ._core import FormatError, presets, rank
from . import _core

__all__ = ["FormatError", "check", "check_text", "construct", "invariants", "presets", "rank"]


def check(path, serial=False):
    """Run a spec file and return the structured report as a dict."""
    return json.loads(_core.check_file(os.fspath(path), serial))


def check_text(text, base_dir=".", serial=False):
    return json.loads(_core.check_text(text, os.fspath(base_dir), serial))


def construct(preset):
    """Serialized structure for a preset name such as "pair:2" or "toykahler"."""
    return json.loads(_core.construct(preset))


def invariants(path, id):
    return json.loads(_core.invariants(os.fspath(path), id))
