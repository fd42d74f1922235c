"""Root sets, extremal root chains and Killing integers.

A :class:`RootSet` holds a finite set of nonzero rational vectors. Every
membership query is made against the set with the zero vector adjoined, so
zero behaves as an always-present root. No inner product is used anywhere.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from . import linalg as la
from .linalg import Vector


class RootSetError(ValueError):
    """Malformed root-set input (zero vector, duplicate, bad dimension...)."""


class ChainError(ValueError):
    """Precondition violation for a chain computation."""


class ChainOverrun(RuntimeError):
    """A chain scan ran past the |Phi| + 1 bound. Indicates a membership bug."""


@dataclass(frozen=True)
class RootSet:
    dimension: int
    roots: tuple  # sorted tuple of nonzero Vectors
    label: str = ""
    _members: frozenset = field(default=frozenset(), repr=False, compare=False)

    def __post_init__(self):
        if self.dimension < 0:
            raise RootSetError("dimension must be nonnegative")
        object.__setattr__(self, "_members", frozenset(self.roots) | {self.zero})

    @classmethod
    def from_vectors(cls, vectors: Iterable[Iterable], dimension: int | None = None,
                     label: str = "") -> "RootSet":
        """Canonicalize, then reject zero vectors and duplicates by input index."""
        vs = [la.as_vector(v) for v in vectors]
        if dimension is None:
            if not vs:
                raise RootSetError("cannot infer the dimension of an empty root list")
            dimension = len(vs[0])
        seen: dict = {}
        for i, v in enumerate(vs):
            if len(v) != dimension:
                raise RootSetError(f"root {i} has {len(v)} coordinates, expected {dimension}")
            if la.is_zero(v):
                raise RootSetError(f"root {i} is the zero vector")
            if v in seen:
                raise RootSetError(f"root {i} duplicates root {seen[v]}")
            seen[v] = i
        return cls(dimension, tuple(sorted(vs)), label)

    @property
    def zero(self) -> Vector:
        return la.zero(self.dimension)

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, v) -> bool:
        """Membership in Phi with zero adjoined."""
        return tuple(v) in self._members

    def is_root(self, v) -> bool:
        """Membership in Phi proper (zero excluded)."""
        return tuple(v) in self._members and not la.is_zero(v)

    def with_zero(self) -> list[Vector]:
        """Phi and zero, sorted lexicographically."""
        return sorted(self._members)

    def without(self, v: Vector) -> "RootSet":
        return RootSet(self.dimension, tuple(r for r in self.roots if r != v), self.label)

    def to_json(self) -> dict:
        return {
            "dimension": self.dimension,
            "label": self.label,
            "roots": [la.format_vector(r) for r in self.roots],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RootSet":
        try:
            dim = data["dimension"]
            roots = data["roots"]
        except (KeyError, TypeError) as exc:
            raise RootSetError(f"missing field {exc}") from None
        if not isinstance(dim, int) or isinstance(dim, bool) or dim < 0:
            raise RootSetError(f"bad dimension {dim!r}")
        if not isinstance(roots, list):
            raise RootSetError("'roots' must be a list")
        parsed = []
        for i, r in enumerate(roots):
            if not isinstance(r, list):
                raise RootSetError(f"root {i} is not a list")
            try:
                parsed.append(la.as_vector(r))
            except (TypeError, ValueError, ZeroDivisionError) as exc:
                raise RootSetError(f"root {i}: {exc}") from None
        return cls.from_vectors(parsed, dimension=dim, label=str(data.get("label", "")))


def load_rootset(path: str | Path) -> RootSet:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise RootSetError(f"{path}: malformed JSON ({exc})") from None
    return RootSet.from_json(data)


def dump_rootset(rs: RootSet, path: str | Path) -> None:
    Path(path).write_text(json.dumps(rs.to_json(), indent=2) + "\n")


@dataclass(frozen=True)
class IntegerPair:
    q: int
    p: int

    def __post_init__(self):
        if self.q < 0 or self.p < 0:
            raise ValueError(f"integer pair must be nonnegative, got ({self.q}, {self.p})")

    def as_tuple(self) -> tuple[int, int]:
        return (self.q, self.p)


@dataclass(frozen=True)
class ChainResult:
    beta: Vector
    alpha: Vector
    pair: IntegerPair
    elements: tuple  # beta - q alpha, ..., beta + p alpha

    @property
    def killing(self) -> int:
        return self.pair.q - self.pair.p

    def __len__(self) -> int:
        return len(self.elements)

    def to_json(self) -> dict:
        return {
            "beta": la.format_vector(self.beta),
            "alpha": la.format_vector(self.alpha),
            "pair": list(self.pair.as_tuple()),
            "killing": self.killing,
            "elements": [la.format_vector(e) for e in self.elements],
        }


def _check_direction(rs: RootSet, alpha: Vector) -> None:
    if len(alpha) != rs.dimension:
        raise ChainError(f"direction has {len(alpha)} coordinates, expected {rs.dimension}")
    if la.is_zero(alpha):
        raise ChainError("direction must be nonzero")
    if not rs.is_root(alpha):
        raise ChainError(f"direction {la.show_vector(alpha)} is not a root")


def _scan(rs: RootSet, start: Vector, step: Vector) -> int:
    """Count how many steps from ``start`` stay inside Phi and zero."""
    bound = len(rs) + 1
    n = 0
    cur = la.add(start, step)
    while cur in rs:
        n += 1
        if n > bound:
            raise ChainOverrun(f"chain scan exceeded {bound} steps")
        cur = la.add(cur, step)
    return n


def extremal_chain(rs: RootSet, beta: Vector, alpha: Vector) -> ChainResult:
    """Maximal unbroken chain beta - q alpha, ..., beta + p alpha in Phi and zero."""
    beta, alpha = tuple(beta), tuple(alpha)
    _check_direction(rs, alpha)
    if beta not in rs:
        raise ChainError(f"{la.show_vector(beta)} is neither a root nor zero")
    p = _scan(rs, beta, alpha)
    q = _scan(rs, beta, la.neg(alpha))
    elements = tuple(la.add(beta, la.scale(j, alpha)) for j in range(-q, p + 1))
    return ChainResult(beta, alpha, IntegerPair(q, p), elements)


def killing_integer(rs: RootSet, beta: Vector, alpha: Vector) -> int:
    return extremal_chain(rs, beta, alpha).killing


@dataclass(frozen=True)
class KillingTable:
    rows: tuple  # beta values: Phi and zero, sorted
    cols: tuple  # alpha values: Phi, sorted
    values: tuple  # values[i][j] = <rows[i], cols[j]>

    def entry(self, beta: Vector, alpha: Vector) -> int:
        return self.values[self.rows.index(tuple(beta))][self.cols.index(tuple(alpha))]

    def to_json(self) -> dict:
        return {
            "rows": [la.format_vector(r) for r in self.rows],
            "cols": [la.format_vector(c) for c in self.cols],
            "values": [list(r) for r in self.values],
        }

    def to_tsv(self) -> str:
        fmt = lambda v: "(" + ",".join(la.format_vector(v)) + ")"
        lines = ["beta\\alpha\t" + "\t".join(fmt(c) for c in self.cols)]
        for r, vals in zip(self.rows, self.values):
            lines.append(fmt(r) + "\t" + "\t".join(str(x) for x in vals))
        return "\n".join(lines) + "\n"


def killing_table(rs: RootSet) -> KillingTable:
    if not rs.roots:
        raise ChainError("killing table of an empty root set")
    rows = tuple(rs.with_zero())
    cols = tuple(rs.roots)
    values = tuple(tuple(killing_integer(rs, b, a) for a in cols) for b in rows)
    return KillingTable(rows, cols, values)


def chain_sum(rs: RootSet, c1: ChainResult, c2: ChainResult) -> tuple:
    """Sum of two chains in the same direction, trimmed to Phi and zero.

    Builds the unbroken chain through beta1 + beta2 with integer pair
    (q1 + q2, p1 + p2) and drops the elements that are not roots or zero.
    The result may be broken.
    """
    if c1.alpha != c2.alpha:
        raise ChainError("chains have different directions")
    alpha = c1.alpha
    centre = la.add(c1.beta, c2.beta)
    if centre not in rs:
        raise ChainError(f"beta1 + beta2 = {la.show_vector(centre)} is neither a root nor zero")
    lo = c1.pair.q + c2.pair.q
    hi = c1.pair.p + c2.pair.p
    unbroken = (la.add(centre, la.scale(j, alpha)) for j in range(-lo, hi + 1))
    return tuple(v for v in unbroken if v in rs)


@dataclass(frozen=True)
class ChainSumReport:
    beta1: Vector
    beta2: Vector
    alpha: Vector
    pair1: IntegerPair
    pair2: IntegerPair
    pair_sum: IntegerPair  # (r, s) of the extremal chain through beta1 + beta2
    summed: tuple  # trimmed chain sum
    extremal: tuple  # extremal chain through beta1 + beta2
    sum_equals_extremal: bool
    containment: bool  # r <= q1 + q2 and s <= p1 + p2
    additivity: bool  # (q1 + q2) - (p1 + p2) == r - s

    def to_json(self) -> dict:
        return {
            "beta1": la.format_vector(self.beta1),
            "beta2": la.format_vector(self.beta2),
            "alpha": la.format_vector(self.alpha),
            "pair1": list(self.pair1.as_tuple()),
            "pair2": list(self.pair2.as_tuple()),
            "pair_sum": list(self.pair_sum.as_tuple()),
            "summed_chain": [la.format_vector(v) for v in self.summed],
            "extremal_chain": [la.format_vector(v) for v in self.extremal],
            "sum_equals_extremal": self.sum_equals_extremal,
            "containment": self.containment,
            "additivity": self.additivity,
        }


def compare_chain_sum(rs: RootSet, beta1: Vector, beta2: Vector, alpha: Vector) -> ChainSumReport:
    """Report how the chain sum relates to the extremal chain through beta1 + beta2.

    Nothing is asserted; counterexamples to containment are returned as data.
    """
    beta1, beta2, alpha = tuple(beta1), tuple(beta2), tuple(alpha)
    c1 = extremal_chain(rs, beta1, alpha)
    c2 = extremal_chain(rs, beta2, alpha)
    c12 = extremal_chain(rs, la.add(beta1, beta2), alpha)
    summed = chain_sum(rs, c1, c2)
    q = c1.pair.q + c2.pair.q
    p = c1.pair.p + c2.pair.p
    r, s = c12.pair.as_tuple()
    return ChainSumReport(
        beta1, beta2, alpha,
        c1.pair, c2.pair, c12.pair,
        summed, c12.elements,
        sum_equals_extremal=summed == c12.elements,
        containment=r <= q and s <= p,
        additivity=(q - p) == (r - s),
    )
