"""Shared fixtures"""

import logging

import pytest

from z2s_simplex.graymap import canonical_map
from z2s_simplex.invariants import BinaryCode
from z2s_simplex.ring import RingVector
from z2s_simplex.settings import Settings

ENV_VARS = (
    "Z2S_CONFIG",
    "Z2S_ENUM_BUDGET",
    "Z2S_KERNEL_BUDGET",
    "Z2S_RANK_BUDGET",
    "Z2S_MATRIX_BUDGET",
    "Z2S_THREADS",
    "LOG_LEVEL",
    "LOG_FORMAT",
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def settings():
    return Settings()


def ring_word(text: str, s: int) -> RingVector:
    """'0123' style words; one digit per coordinate"""
    return RingVector.of([int(ch) for ch in text], s)


def gray_span(strings, s: int) -> BinaryCode:
    """Binary span of the Gray images of the given ring words"""
    gmap = canonical_map(s)
    words = [0]
    length = None
    for text in strings:
        image = gmap.phi_vector(ring_word(text, s))
        length = image.length
        if image.bits not in words:
            words += [w ^ image.bits for w in words]
    return BinaryCode(length, sorted(set(words)))


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
