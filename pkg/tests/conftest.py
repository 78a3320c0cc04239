"""Shared fixtures: the small algebras every test module leans on."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from homassoc import GF, QQ, HomAlgebra
from homassoc.search import library_algebra

sys.path.insert(0, str(Path(__file__).parent))

import oracle  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def dual_numbers(field=QQ, alpha=((1, 0), (0, 1))) -> HomAlgebra:
    """k[x]/(x^2) with basis (1, x)."""
    return HomAlgebra.from_arrays(field, [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], [list(r) for r in alpha], ("1", "x"))


def zero_algebra(field=QQ) -> HomAlgebra:
    return HomAlgebra.from_arrays(field, [[[0, 0], [0, 0]], [[0, 0], [0, 0]]], None, ("a", "b"))


def to_oracle(A: HomAlgebra) -> oracle.Algebra:
    return oracle.Algebra(A.mu.c.tolist(), A.alpha.m.tolist(), A.field.p)


@pytest.fixture
def D():
    return dual_numbers()


@pytest.fixture
def D5():
    return dual_numbers(GF(5))


@pytest.fixture
def Z2():
    return zero_algebra()


@pytest.fixture
def lib():
    return library_algebra


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
