from __future__ import annotations

import sys
from fractions import Fraction

import pytest

from sysroots import linalg as la
from sysroots.catalog import build_family
from sysroots.roots import RootSet


def run_oracle(members: set, beta: tuple, alpha: tuple) -> tuple[int, int]:
    """Brute-force (q, p): list beta + j alpha for |j| <= |members| and take the run through j = 0."""
    n = len(members) + 2
    inside = {j for j in range(-n, n + 1)
              if tuple(b + j * a for b, a in zip(beta, alpha)) in members}
    p = 0
    while p + 1 in inside:
        p += 1
    q = 0
    while -(q + 1) in inside:
        q += 1
    return q, p


def members_of(rs: RootSet) -> set:
    return set(rs.roots) | {rs.zero}


def one_dim(*xs) -> RootSet:
    return RootSet.from_vectors([(Fraction(x),) for x in xs], dimension=1)


@pytest.fixture(scope="session")
def g2tilde():
    return build_family("G2tilde")


@pytest.fixture(scope="session")
def g1tilde():
    return build_family("G1tilde")


@pytest.fixture(scope="session")
def f4tilde():
    return build_family("F4tilde")


def v(*xs):
    return la.vec(*xs)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        name, ok, detail = mod.RESULTS[n]
        terminalreporter.write_line(f"criterion {n:2d} {name}: {'PASS' if ok else 'FAIL'} ({detail})")
