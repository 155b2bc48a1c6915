"""Shared fixtures: one session-wide value table plus hypothesis tuning."""
from __future__ import annotations

import os
from pathlib import Path

import pytest
from hypothesis import settings

from spt2q.series import DEFAULT_TABLE_N
from spt2q.spt import get_table

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")

REPO_ROOT = Path(__file__).resolve().parents[1]
CACHE_DIR = Path(os.environ.get("SPT2_CACHE_DIR", REPO_ROOT / ".spt2q-cache"))


@pytest.fixture(scope="session")
def cache_dir() -> Path:
    CACHE_DIR.mkdir(parents=True, exist_ok=True)
    return CACHE_DIR


@pytest.fixture(scope="session")
def table10k(cache_dir):
    """Full-size spt2 table; loads from the on-disk cache after the first build."""
    return get_table(DEFAULT_TABLE_N, cache_dir=cache_dir)


@pytest.fixture()
def cli_cache_env(cache_dir, monkeypatch):
    """Point the CLI's cache lookup at the session cache directory."""
    monkeypatch.setenv("SPT2_CACHE_DIR", str(cache_dir))
    return cache_dir
