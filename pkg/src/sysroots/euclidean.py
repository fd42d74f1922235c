"""Classical root systems with the dot product, and the chain/Cartan cross-check.

Every Euclidean root system must also be a system of roots, and the Killing
integer q - p read off a root string must equal the Cartan integer
2(beta, alpha)/(alpha, alpha). :func:`cross_validate` checks both exhaustively.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .axioms import AxiomReport, verify_all
from .linalg import Vector
from .roots import RootSet, extremal_chain

HALF = Fraction(1, 2)

# minimum rank per family; exceptional types have a fixed rank
MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}
FIXED_RANK = {"G": 2, "F": 4, "E": (6, 7, 8)}


class UnsupportedType(ValueError):
    pass


class MalformedSystem(ValueError):
    pass


@dataclass(frozen=True)
class EuclideanRootSystem:
    name: str
    ambient: int
    roots: tuple  # sorted Vectors in ambient coordinates

    @property
    def rank(self) -> int:
        return la.rank(list(self.roots))

    def __contains__(self, v) -> bool:
        return tuple(v) in set(self.roots)


def _unit(n: int, i: int, c=1) -> list:
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


def _pm_pairs(n: int) -> set:
    """All +-e_i +- e_j with i < j."""
    out = set()
    for i, j in itertools.combinations(range(n), 2):
        for si, sj in itertools.product((1, -1), repeat=2):
            v = [Fraction(0)] * n
            v[i], v[j] = Fraction(si), Fraction(sj)
            out.add(tuple(v))
    return out


def _e8() -> set:
    roots = _pm_pairs(8)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.add(tuple(HALF * s for s in signs))
    return roots


def build_classical(kind: str, rank: int | None = None) -> EuclideanRootSystem:
    """Standard realization of a reduced irreducible root system.

    ``kind`` is one of A, B, C, D, G, F, E; "G2", "F4", "E6" style names are
    also accepted with ``rank`` omitted.
    """
    kind = kind.strip().upper()
    if len(kind) > 1 and rank is None:
        if not kind[1:].isdigit():
            raise UnsupportedType(f"unknown Cartan type {kind!r}")
        kind, rank = kind[0], int(kind[1:])
    if kind in FIXED_RANK:
        allowed = FIXED_RANK[kind]
        allowed = allowed if isinstance(allowed, tuple) else (allowed,)
        if rank is None:
            rank = allowed[0]
        if rank not in allowed:
            raise UnsupportedType(f"{kind}{rank} is not supported")
    elif kind in MIN_RANK:
        if rank is None or rank < MIN_RANK[kind]:
            raise UnsupportedType(f"{kind}{rank} needs rank >= {MIN_RANK[kind]}")
    else:
        raise UnsupportedType(f"unknown Cartan type {kind!r}")

    if kind == "A":
        n = rank + 1
        roots = {tuple(la.sub(_unit(n, i), _unit(n, j)))
                 for i, j in itertools.permutations(range(n), 2)}
    elif kind in "BCD":
        n = rank
        roots = _pm_pairs(n)
        if kind == "B":
            roots |= {tuple(_unit(n, i, s)) for i in range(n) for s in (1, -1)}
        elif kind == "C":
            roots |= {tuple(_unit(n, i, 2 * s)) for i in range(n) for s in (1, -1)}
    elif kind == "G":
        n = 3
        short = {tuple(la.sub(_unit(3, i), _unit(3, j))) for i, j in itertools.permutations(range(3), 2)}
        long_ = set()
        for i in range(3):
            v = [Fraction(-1)] * 3
            v[i] = Fraction(2)
            long_ |= {tuple(v), la.neg(tuple(v))}
        roots = short | long_
    elif kind == "F":
        n = 4
        roots = _pm_pairs(4) | {tuple(_unit(4, i, s)) for i in range(4) for s in (1, -1)}
        roots |= {tuple(HALF * s for s in signs) for signs in itertools.product((1, -1), repeat=4)}
    else:  # E
        n = 8
        roots = _e8()
        # E7 and E6 as centralizers in E8 of one root, resp. of an A2 pair
        cut = {7: [(0,) * 6 + (1, 1)], 6: [(0,) * 6 + (1, 1), (0,) * 5 + (1, -1, 0)]}.get(rank, [])
        for w in cut:
            w = la.as_vector(w)
            roots = {r for r in roots if la.dot(r, w) == 0}
    return EuclideanRootSystem(f"{kind}{rank}", n, tuple(sorted(roots)))


def cartan_integer(sys: EuclideanRootSystem, beta: Vector, alpha: Vector) -> int:
    """2 (beta, alpha) / (alpha, alpha), which must be an integer."""
    norm = la.dot(alpha, alpha)
    if norm == 0:
        raise MalformedSystem("zero root")
    c = 2 * la.dot(beta, alpha) / norm
    if c.denominator != 1:
        raise MalformedSystem(f"non-integral Cartan number {c} for {beta}, {alpha}")
    return int(c)


def reflect(sys: EuclideanRootSystem, alpha: Vector, v: Vector) -> Vector:
    """Orthogonal reflection of v in the hyperplane perpendicular to alpha."""
    norm = la.dot(alpha, alpha)
    if norm == 0:
        raise ValueError("cannot reflect in the zero vector")
    return la.sub(v, la.scale(2 * la.dot(v, alpha) / norm, alpha))


def chart(sys: EuclideanRootSystem) -> tuple[int, ...]:
    """Ambient coordinate indices whose projection is injective on span(Phi).

    These are the pivot columns of the root matrix, so the projected roots
    have the rank of the system as their dimension.
    """
    cols: list[int] = []
    rows = list(sys.roots)
    for c in range(sys.ambient):
        trial = cols + [c]
        if la.rank([tuple(r[i] for i in trial) for r in rows]) == len(trial):
            cols = trial
    return tuple(cols)


def to_rootset(sys: EuclideanRootSystem) -> tuple[RootSet, dict]:
    """Project to a chart of dimension rank(Phi); returns the set and the ambient lookup."""
    cols = chart(sys)
    proj = {tuple(r[i] for i in cols): r for r in sys.roots}
    rs = RootSet.from_vectors(proj, dimension=len(cols), label=sys.name)
    return rs, proj


@dataclass
class CrossValidation:
    name: str
    report: AxiomReport
    pairs_checked: int = 0
    mismatches: list = field(default_factory=list)  # (beta, alpha, killing, cartan)
    reflection_failures: list = field(default_factory=list)  # (alpha, root)
    chain_not_preserved: list = field(default_factory=list)  # (beta, alpha)

    @property
    def ok(self) -> bool:
        return (self.report.ok and not self.mismatches and not self.reflection_failures
                and not self.chain_not_preserved)

    def to_json(self) -> dict:
        fv = la.format_vector
        return {
            "name": self.name,
            "ok": self.ok,
            "pairs_checked": self.pairs_checked,
            "mismatches": [[fv(b), fv(a), k, c] for b, a, k, c in self.mismatches],
            "reflection_failures": [[fv(a), fv(r)] for a, r in self.reflection_failures],
            "chain_not_preserved": [[fv(b), fv(a)] for b, a in self.chain_not_preserved],
            "axioms": self.report.to_json(),
        }


def cross_validate(sys: EuclideanRootSystem) -> CrossValidation:
    """Run the axiom checks on the projected set and compare every Killing/Cartan pair.

    ``pairs_checked`` counts ordered pairs beta != alpha; the diagonal is
    checked too but not counted.
    """
    rs, amb = to_rootset(sys)
    out = CrossValidation(sys.name, verify_all(rs))
    root_set = set(sys.roots)
    for a in rs.roots:
        alpha = amb[a]
        for r in sys.roots:
            if reflect(sys, alpha, r) not in root_set:
                out.reflection_failures.append((alpha, r))
        for b in rs.roots:
            beta = amb[b]
            ch = extremal_chain(rs, b, a)
            cart = cartan_integer(sys, beta, alpha)
            if b != a:
                out.pairs_checked += 1
            if ch.killing != cart:
                out.mismatches.append((beta, alpha, ch.killing, cart))
            # the reflection must map the chain through beta onto itself
            members = {la.add(beta, la.scale(j, alpha)) for j in range(-ch.pair.q, ch.pair.p + 1)}
            if {reflect(sys, alpha, m) for m in members} != members:
                out.chain_not_preserved.append((beta, alpha))
    return out
