"""The six families of very special sandwich algebras of class C.

Each family is given by a Cartan subalgebra h (vectors in R^n) and a list of
root functionals in epsilon coordinates. Restricting every functional to h
gives the nonzero roots Phi of the nilradical together with the central
root zeta, which must restrict to zero.

Two entries of the source tables are inconsistent with the Heisenberg
labels and are patched here; the patches are listed in :attr:`CatalogEntry.errata`:

* G1tilde: ``alpha^1 = (eps2 - eps3)|h`` restricts to 0. We use
  ``eps3 - eps1``, which restricts to ``-alpha_1``.
* E7tilde: the index range ``j, l in {1..5}`` gives 22 roots where h_33
  needs 32. We use ``{1..6}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .linalg import Vector
from .roots import RootSet

HALF = Fraction(1, 2)

FAMILIES = ("Ctilde", "G1tilde", "G2tilde", "F4tilde", "E6tilde", "E7tilde")
ALIASES = {f.lower(): f for f in FAMILIES}
ALIASES.update({"c": "Ctilde", "g1": "G1tilde", "g2": "G2tilde", "f4": "F4tilde",
                "e6": "E6tilde", "e7": "E7tilde"})


class CatalogError(ValueError):
    """Bad family parameters or an internally inconsistent family table."""


def expected_nilradical_dim(family: str, rank: int | None = None) -> int:
    family = canonical_family(family)
    if family == "Ctilde":
        if rank is None or rank < 1:
            raise CatalogError("Ctilde needs rank l >= 1")
        return 2 * rank + 1
    return {"G1tilde": 3, "G2tilde": 5, "F4tilde": 15, "E6tilde": 21, "E7tilde": 33}[family]


def canonical_family(name: str) -> str:
    try:
        return ALIASES[name.strip().lower()]
    except KeyError:
        raise CatalogError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None


def restrict(functional: Vector, cartan_basis: list) -> Vector:
    """Evaluate an epsilon-coordinate functional on each basis vector of h."""
    out = []
    for h in cartan_basis:
        if len(h) != len(functional):
            raise CatalogError(f"functional has {len(functional)} coordinates, basis vector has {len(h)}")
        out.append(la.dot(functional, h))
    return tuple(out)


def _eps(n: int, coeffs: dict) -> Vector:
    """Epsilon combination from {index (1-based): coefficient}."""
    v = [Fraction(0)] * n
    for i, c in coeffs.items():
        v[i - 1] += Fraction(c)
    return tuple(v)


def _signs(n: int, minus: set, scale=HALF, extra: dict | None = None) -> Vector:
    """scale * sum_i (-1)^[i in minus] eps_i over the first n indices, plus extra terms."""
    coeffs = {i: (-scale if i in minus else scale) for i in range(1, n + 1)}
    for i, c in (extra or {}).items():
        coeffs[i] = coeffs.get(i, 0) + c
    return _eps(max(coeffs), coeffs)


def _pad(v: Vector, n: int) -> Vector:
    return tuple(v) + (Fraction(0),) * (n - len(v))


def _table_ctilde(l: int):
    n = l + 1
    basis = [(f"h{i}", _eps(n, {i: 1, i + 1: -1})) for i in range(2, l + 1)]
    basis.append((f"h{l + 1}", _eps(n, {l + 1: 1})))
    zeta = _eps(n, {1: -2})
    roots = []
    for k in range(1, l + 1):
        roots.append((f"alpha_{k}", _eps(n, {1: -1, k + 1: 1})))
        roots.append((f"alpha^{k}", _eps(n, {1: -1, k + 1: -1})))
    return n, basis, zeta, roots, []


def _table_g1(unpatched: bool = False):
    n = 3
    basis = [("h2", _eps(n, {1: -2, 2: -1, 3: -1}))]
    zeta = _eps(n, {2: 1, 3: -1})
    roots = [
        ("alpha_1", _eps(n, {1: 1, 3: -1})),
        ("alpha^1", _eps(n, {2: 1, 3: -1}) if unpatched else _eps(n, {3: 1, 1: -1})),
    ]
    if unpatched:
        return n, basis, zeta, roots, []
    errata = ["alpha^1 given as (eps2-eps3)|h, which restricts to 0; encoded as (eps3-eps1)|h = -alpha_1"]
    return n, basis, zeta, roots, errata


def _table_g2():
    n = 3
    basis = [("h1", _eps(n, {1: 1, 2: -1}))]
    zeta = _eps(n, {1: 1, 2: 1, 3: -2})
    roots = [
        ("alpha_1", _eps(n, {1: -1, 2: 2, 3: -1})),
        ("alpha^1", _eps(n, {1: 2, 2: -1, 3: -1})),
        ("alpha_2", _eps(n, {2: 1, 3: -1})),
        ("alpha^2", _eps(n, {1: 1, 3: -1})),
    ]
    return n, basis, zeta, roots, []


def _table_f4():
    n = 4
    basis = [
        ("h2", _eps(n, {3: 1, 4: -1})),
        ("h3", _eps(n, {4: 2})),
        ("h4", _eps(n, {1: 1, 2: -1, 3: -1, 4: -1})),
    ]
    zeta = _eps(n, {1: 1, 2: 1})
    roots = [("alpha_1", _eps(n, {1: -1})), ("alpha^1", _eps(n, {2: -1}))]
    for k in (1, 2):
        roots.append((f"alpha_{k + 1}", _eps(n, {1: -1, k + 2: 1})))
        roots.append((f"alpha^{k + 1}", _eps(n, {2: -1, k + 2: -1})))
    for k in (1, 2):
        roots.append((f"alpha_{k + 3}", _eps(n, {1: -1, k + 2: -1})))
        roots.append((f"alpha^{k + 3}", _eps(n, {2: -1, k + 2: 1})))
    h = HALF
    roots += [
        ("alpha_6", _eps(n, {1: -h, 2: -h, 3: h, 4: h})),
        ("alpha^6", _eps(n, {1: -h, 2: -h, 3: -h, 4: -h})),
        ("alpha_7", _eps(n, {1: -h, 2: -h, 3: -h, 4: h})),
        ("alpha^7", _eps(n, {1: -h, 2: -h, 3: h, 4: -h})),
    ]
    return n, basis, zeta, roots, []


def _table_e6():
    n = 6
    basis = [("h1", _eps(n, {1: HALF, 2: -HALF, 3: -HALF, 4: -HALF, 5: -HALF, 6: 3 * HALF}))]
    basis += [(f"h{i}", _eps(n, {i - 1: 1, i - 2: -1})) for i in range(3, 7)]
    zeta = _eps(n, {i: -HALF for i in range(1, 7)})
    roots = []
    for i, j in itertools.combinations(range(1, 6), 2):
        roots.append((f"alpha_{i}{j}", _eps(n, {i: -1, j: -1})))
    for trip in itertools.combinations(range(1, 6), 3):
        label = "alpha_" + "".join(map(str, trip))
        roots.append((label, _pad(_signs(5, set(trip), extra={6: -HALF}), n)))
    return n, basis, zeta, roots, []


def _table_e7(unpatched: bool = False):
    n = 7
    top = 5 if unpatched else 6
    basis = [("h2", _eps(n, {2: 1, 1: -1})), ("h3", _eps(n, {2: 1, 1: 1}))]
    basis += [(f"h{i}", _eps(n, {i - 1: 1, i - 2: -1})) for i in range(4, 8)]
    zeta = _eps(n, {7: -1})
    roots = [
        ("alpha_1", _signs(6, set(), extra={7: -HALF})),
        ("alpha^1", _eps(n, {i: -HALF for i in range(1, 8)})),
    ]
    for j, l in itertools.combinations(range(1, top + 1), 2):
        roots.append((f"alpha_{j}{l}", _signs(6, {j, l}, extra={7: -HALF})))
        rest = set(range(1, 7)) - {j, l}
        roots.append((f"alpha^{j}{l}", _signs(6, rest, extra={7: -HALF})))
    if unpatched:
        return n, basis, zeta, roots, []
    errata = ["index range j,l in {1..5} extended to {1..6} so that the nilradical is h_33"]
    return n, basis, zeta, roots, errata


@dataclass(frozen=True)
class CatalogEntry:
    family: str
    rank: int | None
    ambient: int
    cartan_basis: tuple  # (label, Vector in e-coordinates)
    unrestricted: tuple  # (label, Vector in epsilon-coordinates)
    zeta_unrestricted: Vector
    zeta_restricted: Vector
    restricted: RootSet
    labels: dict  # restricted Vector -> label
    pi_hat: tuple  # sorted simple positive roots
    errata: tuple = field(default=())

    @property
    def m(self) -> int:
        return len(self.pi_hat)

    @property
    def nilradical_dim(self) -> int:
        return 2 * self.m + 1

    @property
    def expected_dim(self) -> int:
        return expected_nilradical_dim(self.family, self.rank)

    def to_json(self) -> dict:
        fv = la.format_vector
        return {
            "family": self.family,
            "rank": self.rank,
            "ambient_dimension": self.ambient,
            "cartan_basis": [{"label": lab, "vector": fv(v)} for lab, v in self.cartan_basis],
            "zeta": {"functional": fv(self.zeta_unrestricted), "restricted": fv(self.zeta_restricted)},
            "roots": [
                {"label": lab, "functional": fv(f), "restricted": fv(restrict(f, [h for _, h in self.cartan_basis]))}
                for lab, f in self.unrestricted
            ],
            "restricted": self.restricted.to_json(),
            "pi_hat": [fv(v) for v in self.pi_hat],
            "pi_hat_labels": [self.labels[v] for v in self.pi_hat],
            "m": self.m,
            "nilradical_dim": self.nilradical_dim,
            "expected_nilradical_dim": self.expected_dim,
            "errata": list(self.errata),
        }


def simple_positive_roots(rs: RootSet) -> tuple:
    """Pick one root from each pair {a, -a}: the lexicographically larger one.

    Raises CatalogError if some root has no negative in the set.
    """
    chosen = []
    for r in rs.roots:
        if not rs.is_root(la.neg(r)):
            raise CatalogError(f"root {la.show_vector(r)} has no partner summing to zero")
        if r > la.neg(r):
            chosen.append(r)
    return tuple(sorted(chosen))


def simplicity_violations(rs: RootSet, pi_hat) -> list:
    """Triples (pi, a, b) with a, b in Phi and a + b = pi in pi_hat."""
    pis = set(pi_hat)
    out = []
    for i, a in enumerate(rs.roots):
        for b in rs.roots[i:]:
            s = la.add(a, b)
            if s in pis:
                out.append((s, a, b))
    return sorted(out)


def check_simplicity(entry_or_set, pi_hat=None) -> bool:
    """True iff no simple positive root is a sum of two roots of Phi."""
    if isinstance(entry_or_set, CatalogEntry):
        rs, pi_hat = entry_or_set.restricted, entry_or_set.pi_hat
    else:
        rs = entry_or_set
        pi_hat = simple_positive_roots(rs) if pi_hat is None else pi_hat
    return not simplicity_violations(rs, pi_hat)


def build_family(family: str, rank: int | None = None, unpatched: bool = False) -> CatalogEntry:
    """Materialize, restrict and validate one family of the catalog.

    ``unpatched=True`` skips the two table patches; both unpatched families
    then fail validation with a CatalogError.
    """
    family = canonical_family(family)
    if family == "Ctilde":
        if rank is None or int(rank) < 1:
            raise CatalogError("Ctilde needs rank l >= 1")
        table = _table_ctilde(int(rank))
    else:
        if rank is not None:
            raise CatalogError(f"{family} takes no rank parameter")
        if family == "G1tilde":
            table = _table_g1(unpatched)
        elif family == "E7tilde":
            table = _table_e7(unpatched)
        else:
            table = {"G2tilde": _table_g2, "F4tilde": _table_f4, "E6tilde": _table_e6}[family]()
    n, basis, zeta, roots, errata = table
    hs = [h for _, h in basis]

    zeta_r = restrict(zeta, hs)
    if not la.is_zero(zeta_r):
        raise CatalogError(f"{family}: zeta restricts to {la.show_vector(zeta_r)}, not zero")

    labels: dict = {}
    for lab, f in roots:
        r = restrict(f, hs)
        if la.is_zero(r):
            raise CatalogError(f"{family}: {lab} restricts to zero and collides with zeta")
        if r in labels:
            raise CatalogError(f"{family}: {lab} and {labels[r]} restrict to the same root")
        labels[r] = lab
    label = family if rank is None else f"{family}{rank}"
    rs = RootSet.from_vectors(labels, dimension=len(hs), label=label)
    labels[rs.zero] = "zeta"

    pi_hat = simple_positive_roots(rs)
    entry = CatalogEntry(family, rank, n, tuple(basis), tuple(roots), zeta, zeta_r, rs,
                         labels, pi_hat, tuple(errata))
    if entry.nilradical_dim != entry.expected_dim:
        raise CatalogError(f"{family}: 2M+1 = {entry.nilradical_dim}, expected {entry.expected_dim}")
    return entry


def all_families(c_ranks=range(1, 9)) -> list[CatalogEntry]:
    out = [build_family("Ctilde", l) for l in c_ranks]
    out += [build_family(f) for f in FAMILIES[1:]]
    return out
