"""Exhaustive checks of the five system-of-roots axioms, with counterexamples."""

from __future__ import annotations

import time
from math import gcd
from dataclasses import dataclass, field

from . import linalg as la
from .roots import ChainOverrun, RootSet

PASS = "pass"
FAIL = "fail"

MAX_COUNTEREXAMPLES = 1000

# Keys of the derived-property sweeps in the JSON report.
SIGN_IMPLICATION = "claim_1_2_2"
NEGATION_ANTISYMMETRY = "lemma_1_2_3"
CHAIN_REVERSAL = "chain_reversal"
ZERO_ROW = "zero_row"


@dataclass(frozen=True)
class Counterexample:
    check: str
    witness: tuple  # tuple of Vectors
    observed: object = None
    expected: object = None

    def sort_key(self):
        return (self.check, self.witness)

    def to_json(self) -> dict:
        return {
            "id": self.check,
            "witness": [la.format_vector(v) for v in self.witness],
            "observed": self.observed,
            "expected": self.expected,
        }


@dataclass
class CheckResult:
    """Outcome of one axiom or property sweep."""

    check: str
    counterexamples: list = field(default_factory=list)
    truncated: bool = False
    checked: int = 0

    @property
    def status(self) -> str:
        return FAIL if self.counterexamples else PASS

    def record(self, witness, observed=None, expected=None) -> None:
        if len(self.counterexamples) >= MAX_COUNTEREXAMPLES:
            self.truncated = True
            return
        self.counterexamples.append(Counterexample(self.check, tuple(witness), observed, expected))

    def finish(self) -> "CheckResult":
        self.counterexamples.sort(key=Counterexample.sort_key)
        return self


class ChainIndex:
    """Integer-pair lookup over one root set, for exhaustive sweeps.

    The universe Phi + {0} is sorted and indexed once; coordinates are scaled
    to integers so hashing stays cheap. For each direction a successor table
    maps index i to the index of ``u_i + alpha`` (or -1), and chains are walked
    through it. Every walk is bounded by |Phi| + 1 steps.
    """

    def __init__(self, rs: RootSet):
        self.rs = rs
        self.universe = rs.with_zero()
        den = 1
        for v in self.universe:
            for x in v:
                den = den * x.denominator // gcd(den, x.denominator)
        self._ints = [tuple(int(x * den) for x in v) for v in self.universe]
        self._pos = {v: i for i, v in enumerate(self._ints)}
        self.zero = self._pos[tuple([0] * rs.dimension)]
        self.roots = [i for i in range(len(self.universe)) if i != self.zero]
        self.neg = [self._pos.get(tuple(-x for x in v), -1) for v in self._ints]
        self._succ: dict = {}
        self._pred: dict = {}
        self._pairs: dict = {}
        self.bound = len(rs) + 1
        self.scans = 0
        self.longest = 0

    def index(self, v) -> int:
        return self.universe.index(tuple(v))

    def sum_index(self, i: int, j: int) -> int:
        """Index of u_i + u_j, or -1 if the sum is not in the universe."""
        a, b = self._ints[i], self._ints[j]
        return self._pos.get(tuple(x + y for x, y in zip(a, b)), -1)

    def _tables(self, a: int):
        if a not in self._succ:
            succ = [self.sum_index(i, a) for i in range(len(self.universe))]
            pred = [-1] * len(succ)
            for i, j in enumerate(succ):
                if j >= 0:
                    pred[j] = i
            self._succ[a], self._pred[a] = succ, pred
        return self._succ[a], self._pred[a]

    def _walk(self, table, i: int) -> int:
        n = 0
        i = table[i]
        while i >= 0:
            n += 1
            if n > self.bound:
                raise ChainOverrun(f"chain scan exceeded {self.bound} steps")
            i = table[i]
        return n

    def pair(self, b: int, a: int) -> tuple[int, int]:
        """(q, p) for the chain through u_b in direction u_a."""
        key = (b, a)
        if key not in self._pairs:
            succ, pred = self._tables(a)
            p = self._walk(succ, b)
            q = self._walk(pred, b)
            self.scans += 1
            self.longest = max(self.longest, q + p + 1)
            self._pairs[key] = (q, p)
        return self._pairs[key]

    def __call__(self, b: int, a: int) -> int:
        q, p = self.pair(b, a)
        return q - p


def verify_axiom1(rs: RootSet) -> CheckResult:
    """Phi spans a space of the declared dimension."""
    res = CheckResult("1", checked=1)
    r = la.rank(list(rs.roots)) if rs.roots else 0
    if r != rs.dimension:
        res.record((), observed=r, expected=rs.dimension)
    return res.finish()


def verify_axiom2(rs: RootSet) -> CheckResult:
    """Phi = -Phi; each witness is a root whose negative is missing."""
    res = CheckResult("2")
    for r in rs.roots:
        res.checked += 1
        if not rs.is_root(la.neg(r)):
            res.record((r,), observed="negative missing", expected="negative present")
    return res.finish()


def verify_axiom3(rs: RootSet, ix: ChainIndex | None = None) -> CheckResult:
    """Every chain scan over Phi and zero terminates within the |Phi| + 1 bound.

    Existence of extremal chains is automatic for a finite set; this only
    guards the scanning code itself.
    """
    ix = ix or ChainIndex(rs)
    res = CheckResult("3")
    for a in ix.roots:
        for b in range(len(ix.universe)):
            res.checked += 1
            try:
                ix.pair(b, a)
            except ChainOverrun as exc:
                res.record((ix.universe[b], ix.universe[a]), observed=str(exc),
                           expected="terminating scan")
    return res.finish()


def verify_axiom4(rs: RootSet, ix: ChainIndex | None = None) -> CheckResult:
    """Killing integers are additive in the first slot whenever the sum is a root or zero.

    Unordered pairs b1 <= b2 suffice since the sum is symmetric.
    """
    ix = ix or ChainIndex(rs)
    res = CheckResult("4")
    n = len(ix.universe)
    sums = [(i, j, s) for i in range(n) for j in range(i, n) if (s := ix.sum_index(i, j)) >= 0]
    u = ix.universe
    for a in ix.roots:
        for i, j, s in sums:
            res.checked += 1
            lhs = ix(s, a)
            rhs = ix(i, a) + ix(j, a)
            if lhs != rhs:
                res.record((u[a], u[i], u[j]), observed=lhs, expected=rhs)
    return res.finish()


def verify_axiom5(rs: RootSet, ix: ChainIndex | None = None) -> CheckResult:
    """<alpha, alpha> = 2 for every root."""
    ix = ix or ChainIndex(rs)
    res = CheckResult("5")
    for a in ix.roots:
        res.checked += 1
        k = ix(a, a)
        if k != 2:
            res.record((ix.universe[a],), observed=k, expected=2)
    return res.finish()


def check_sign_implications(rs: RootSet, ix: ChainIndex | None = None) -> CheckResult:
    """Negative Killing integer forces beta + alpha in Phi and zero; positive forces beta - alpha."""
    ix = ix or ChainIndex(rs)
    res = CheckResult(SIGN_IMPLICATION)
    u = ix.universe
    for a in ix.roots:
        succ, pred = ix._tables(a)
        for b in ix.roots:
            res.checked += 1
            k = ix(b, a)
            if k < 0 and succ[b] < 0:
                res.record((u[b], u[a]), observed=k, expected="beta+alpha in Phi or zero")
            if k > 0 and pred[b] < 0:
                res.record((u[b], u[a]), observed=k, expected="beta-alpha in Phi or zero")
    return res.finish()


def check_negation_antisymmetry(rs: RootSet, ix: ChainIndex | None = None) -> CheckResult:
    """<beta, -alpha> = -<beta, alpha> = <-beta, alpha>, wherever the negatives are roots."""
    ix = ix or ChainIndex(rs)
    res = CheckResult(NEGATION_ANTISYMMETRY)
    u = ix.universe
    for a in ix.roots:
        na = ix.neg[a]
        for b in ix.roots:
            k = ix(b, a)
            if na >= 0:
                res.checked += 1
                k2 = ix(b, na)
                if k2 != -k:
                    res.record((u[b], u[na]), observed=k2, expected=-k)
            nb = ix.neg[b]
            if nb >= 0:
                res.checked += 1
                k3 = ix(nb, a)
                if k3 != -k:
                    res.record((u[nb], u[a]), observed=k3, expected=-k)
    return res.finish()


def check_chain_reversal(rs: RootSet, ix: ChainIndex | None = None) -> CheckResult:
    """Reversing the direction swaps the integer pair."""
    ix = ix or ChainIndex(rs)
    res = CheckResult(CHAIN_REVERSAL)
    u = ix.universe
    for a in ix.roots:
        na = ix.neg[a]
        if na < 0:
            continue
        for b in range(len(u)):
            res.checked += 1
            q, p = ix.pair(b, a)
            rev = ix.pair(b, na)
            if rev != (p, q):
                res.record((u[b], u[a]), observed=list(rev), expected=[p, q])
    return res.finish()


def check_zero_row(rs: RootSet, ix: ChainIndex | None = None) -> CheckResult:
    """The chain through zero is symmetric in every direction."""
    ix = ix or ChainIndex(rs)
    res = CheckResult(ZERO_ROW)
    for a in ix.roots:
        res.checked += 1
        q, p = ix.pair(ix.zero, a)
        if q != p:
            res.record((ix.universe[ix.zero], ix.universe[a]), observed=[q, p], expected="q == p")
    return res.finish()


@dataclass
class AxiomReport:
    label: str
    axioms: dict  # "1".."5" -> CheckResult
    properties: dict  # property key -> CheckResult
    chain_scans: int = 0
    longest_chain: int = 0
    timing: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.status == PASS for r in (*self.axioms.values(), *self.properties.values()))

    @property
    def counterexamples(self) -> list:
        out = []
        for r in (*self.axioms.values(), *self.properties.values()):
            out.extend(r.counterexamples)
        return sorted(out, key=Counterexample.sort_key)

    def status(self, key: str) -> str:
        if key in self.axioms:
            return self.axioms[key].status
        return self.properties[key].status

    def to_json(self, include_timing: bool = False) -> dict:
        def summary(r: CheckResult) -> dict:
            return {"status": r.status, "checked": r.checked, "truncated": r.truncated}

        axioms = {k: summary(self.axioms[k]) for k in sorted(self.axioms)}
        axioms["3"]["note"] = "implied by finiteness; chain scans re-verified"
        out = {
            "label": self.label,
            "ok": self.ok,
            "axioms": axioms,
            "properties": {k: summary(v) for k, v in sorted(self.properties.items())},
            "chain_scans": self.chain_scans,
            "longest_chain": self.longest_chain,
            "counterexamples": [c.to_json() for c in self.counterexamples],
        }
        if include_timing:
            out["timing"] = dict(self.timing)
        return out


def verify_all(rs: RootSet) -> AxiomReport:
    """Run axioms 1, 2, 5, 4 (3 is the scan-termination guard) and the property sweeps."""
    kil = ChainIndex(rs)
    timing = {}

    def timed(name, fn, *args):
        t0 = time.perf_counter()
        out = fn(*args)
        timing[name] = time.perf_counter() - t0
        return out

    axioms = {
        "1": timed("axiom1", verify_axiom1, rs),
        "2": timed("axiom2", verify_axiom2, rs),
        "3": timed("axiom3", verify_axiom3, rs, kil),
        "5": timed("axiom5", verify_axiom5, rs, kil),
        "4": timed("axiom4", verify_axiom4, rs, kil),
    }
    properties = {
        SIGN_IMPLICATION: timed("sign", check_sign_implications, rs, kil),
        NEGATION_ANTISYMMETRY: timed("antisymmetry", check_negation_antisymmetry, rs, kil),
        CHAIN_REVERSAL: timed("reversal", check_chain_reversal, rs, kil),
        ZERO_ROW: timed("zero_row", check_zero_row, rs, kil),
    }
    return AxiomReport(rs.label, axioms, properties, kil.scans, kil.longest, timing)
