from __future__ import annotations

import os
import sys
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from eqtutte.matroid import Graph, default_ground, enumerate_labeled_matroids, matroid_from_bases, uniform

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

FIXTURE_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "fixtures")


@lru_cache(maxsize=None)
def corpus(max_size: int = 4) -> tuple:
    """Every labeled matroid on {0..n-1} for n <= max_size."""
    out = []
    for n in range(max_size + 1):
        out.extend(enumerate_labeled_matroids(default_ground(n)))
    return tuple(out)


def nonempty_corpus(max_size: int = 4) -> tuple:
    return tuple(M for M in corpus(max_size) if M.size > 0)


def circuit3_coloop():
    return matroid_from_bases("0123", [("0", "1", "3"), ("0", "2", "3"), ("1", "2", "3")])


def triangle() -> Graph:
    return Graph.build("abc", [("e1", "a", "b"), ("e2", "b", "c"), ("e3", "c", "a")])


def u(k: int, n: int):
    return uniform(k, default_ground(n))


def bases_of(M):
    return [set(b) for b in M.basis_labels()]


@pytest.fixture
def fixture_path():
    return lambda name: os.path.join(FIXTURE_DIR, name)
