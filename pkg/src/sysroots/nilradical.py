"""The Heisenberg nilradical h_{2M+1} of a catalog family and its root subalgebras.

Basis order is fixed: sorted simple positive roots, then their sorted
negatives, then the central vector. The only nonzero brackets are
``[X_a, X_-a] = X_zeta`` for ``a`` in the simple positive roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg as la
from .linalg import Matrix, Vector, jordan_chains, jordan_type, nilpotency_index
from .roots import RootSet, extremal_chain

ZETA = "zeta"


class NilradicalError(ValueError):
    pass


@dataclass(frozen=True)
class NilradicalAlgebra:
    roots: RootSet
    pi_hat: tuple
    basis: tuple  # root Vector per basis index; zero vector for the centre
    labels: tuple  # label per basis index
    brackets: dict  # (i, j) -> coefficient of X_zeta in [b_i, b_j]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def centre(self) -> int:
        return self.dim - 1

    def index(self, key) -> int:
        """Basis index from an index, a label or a root vector."""
        if isinstance(key, int):
            if not 0 <= key < self.dim:
                raise NilradicalError(f"basis index {key} out of range")
            return key
        if isinstance(key, str):
            try:
                return self.labels.index(key)
            except ValueError:
                raise NilradicalError(f"unknown basis label {key!r}") from None
        try:
            return self.basis.index(tuple(key))
        except ValueError:
            raise NilradicalError(f"no basis vector for root {la.show_vector(tuple(key))}") from None

    def bracket(self, x: Vector, y: Vector) -> Vector:
        """Bracket of two elements given by coordinates in the basis."""
        c = Fraction(0)
        for (i, j), k in self.brackets.items():
            c += k * x[i] * y[j]
        out = [Fraction(0)] * self.dim
        out[self.centre] = c
        return tuple(out)

    def unit(self, i: int) -> Vector:
        v = [Fraction(0)] * self.dim
        v[i] = Fraction(1)
        return tuple(v)

    def structure_constants(self) -> dict:
        """{(label_i, label_j): coefficient of X_zeta}, nonzero entries only."""
        return {(self.labels[i], self.labels[j]): k for (i, j), k in sorted(self.brackets.items())}


def _default_label(v: Vector) -> str:
    return "X(" + ",".join(la.format_vector(v)) + ")"


def build_nilradical(entry=None, *, roots: RootSet | None = None, pi_hat=None,
                     labels: dict | None = None) -> NilradicalAlgebra:
    """Heisenberg algebra on the root spaces of a catalog entry (or a bare root set).

    With ``entry`` the catalog's root labels name the basis; otherwise the
    basis is named by coordinates.
    """
    if entry is not None:
        roots, pi_hat, labels = entry.restricted, entry.pi_hat, entry.labels
    if roots is None:
        raise NilradicalError("need a catalog entry or a root set")
    if pi_hat is None:
        from .catalog import simple_positive_roots
        pi_hat = simple_positive_roots(roots)
    pi_hat = tuple(sorted(pi_hat))
    negs = tuple(sorted(la.neg(a) for a in pi_hat))
    basis = pi_hat + negs + (roots.zero,)
    if set(basis[:-1]) != set(roots.roots):
        raise NilradicalError("roots are not the disjoint union of pi_hat and its negatives")
    names = []
    for v in basis:
        if labels and v in labels:
            names.append(labels[v])
        elif la.is_zero(v):
            names.append(ZETA)
        else:
            names.append(_default_label(v))
    brackets = {}
    pos = {v: i for i, v in enumerate(basis)}
    for a in pi_hat:
        i, j = pos[a], pos[la.neg(a)]
        brackets[(i, j)] = Fraction(1)
        brackets[(j, i)] = Fraction(-1)
    return NilradicalAlgebra(roots, pi_hat, basis, tuple(names), brackets)


def adjoint_matrix(alg: NilradicalAlgebra, key) -> Matrix:
    """Matrix of ad_x over the fixed basis; column j holds [x, b_j]."""
    i = alg.index(key)
    rows = [[Fraction(0)] * alg.dim for _ in range(alg.dim)]
    for (a, b), k in alg.brackets.items():
        if a == i:
            rows[alg.centre][b] += k
    return Matrix.from_rows(rows)


def check_jacobi(alg: NilradicalAlgebra) -> list:
    """Basis triples violating the Jacobi identity (empty for a Lie algebra)."""
    bad = []
    units = [alg.unit(i) for i in range(alg.dim)]
    for i in range(alg.dim):
        for j in range(alg.dim):
            for k in range(alg.dim):
                x, y, z = units[i], units[j], units[k]
                s = la.add(la.add(alg.bracket(x, alg.bracket(y, z)), alg.bracket(y, alg.bracket(z, x))),
                           alg.bracket(z, alg.bracket(x, y)))
                if not la.is_zero(s):
                    bad.append((i, j, k))
    return bad


def check_antisymmetry(alg: NilradicalAlgebra) -> list:
    return sorted((i, j) for (i, j), k in alg.brackets.items() if alg.brackets.get((j, i), 0) != -k)


def check_sandwich(alg: NilradicalAlgebra) -> list:
    """Basis pairs (i, j) with ad_i ad_j != 0."""
    ads = [adjoint_matrix(alg, i_label) for i_label in alg.labels]
    return [(i, j) for i in range(alg.dim) for j in range(alg.dim) if not (ads[i] @ ads[j]).is_zero()]


def derived_rank(alg: NilradicalAlgebra) -> int:
    """Dimension of the span of all brackets of non-central basis vectors."""
    vs = [alg.bracket(alg.unit(i), alg.unit(j))
          for i in range(alg.centre) for j in range(alg.centre)]
    return la.rank(vs)


@dataclass(frozen=True)
class RootSubalgebra:
    """span{X_a, X_-a, X_zeta} for a simple positive root a."""

    alg: NilradicalAlgebra
    alpha: Vector

    @property
    def x_plus(self) -> int:
        return self.alg.index(self.alpha)

    @property
    def x_minus(self) -> int:
        return self.alg.index(la.neg(self.alpha))

    @property
    def h(self) -> int:
        return self.alg.centre

    def generators(self) -> dict:
        return {"X+": self.x_plus, "X-": self.x_minus, "H": self.h}

    def relations_hold(self) -> bool:
        a = self.alg
        u = a.unit
        return (la.is_zero(a.bracket(u(self.h), u(self.x_plus)))
                and la.is_zero(a.bracket(u(self.h), u(self.x_minus)))
                and a.bracket(u(self.x_plus), u(self.x_minus)) == u(self.h))


def root_subalgebra(alg: NilradicalAlgebra, alpha) -> RootSubalgebra:
    alpha = tuple(alpha)
    if alpha not in alg.pi_hat:
        raise NilradicalError(f"{la.show_vector(alpha)} is not a simple positive root")
    sub = RootSubalgebra(alg, alpha)
    if not sub.relations_hold():
        raise NilradicalError("Heisenberg relations fail for the root subalgebra")
    return sub


@dataclass(frozen=True)
class HeisenbergRepMatrices:
    n: int
    rho_x: Matrix
    rho_y: Matrix
    rho_h: Matrix

    def relations_hold(self) -> bool:
        from .linalg import commutator
        return (commutator(self.rho_h, self.rho_x).is_zero()
                and commutator(self.rho_h, self.rho_y).is_zero()
                and commutator(self.rho_x, self.rho_y) == self.rho_h)

    def to_json(self) -> dict:
        return {"n": self.n, "X": self.rho_x.to_json(), "Y": self.rho_y.to_json(),
                "H": self.rho_h.to_json()}


def rep_matrices(n: int) -> HeisenbergRepMatrices:
    """(n+1)-dimensional representation of h_3 with rho(Y) a full lower Jordan block.

    For n >= 2, rho(X) has -1 at (n-1, 0) and 1 at (n, 1), and rho(H) has a
    single 2 in the lower-left corner (0-based indices). For n <= 1 both are
    zero.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    size = n + 1
    y = Matrix.lower_jordan_block(size)
    x = [[0] * size for _ in range(size)]
    h = [[0] * size for _ in range(size)]
    if n >= 2:
        x[n - 1][0] = -1
        x[n][1] = 1
        h[n][0] = 2
    rep = HeisenbergRepMatrices(n, Matrix.from_rows(x), y, Matrix.from_rows(h))
    if not rep.relations_hold():
        raise AssertionError(f"bracket relations fail for n={n}")
    return rep


@dataclass(frozen=True)
class ChainSpace:
    top: Vector  # beta + p alpha; the representative, so p = 0
    q: int
    p: int
    indices: tuple  # basis indices, bottom of the chain first
    labels: tuple
    invariant: bool  # ad of all three generators preserves the span
    restricted_type: tuple  # Jordan type of ad_{X_-a} on the span (empty if not invariant)

    @property
    def dim(self) -> int:
        return len(self.indices)

    @property
    def matches_irreducible(self) -> bool:
        """The span is a single Jordan chain of ad_{X_-a} of full length."""
        return self.invariant and self.restricted_type == (self.dim,)

    def to_json(self) -> dict:
        return {
            "top": la.format_vector(self.top),
            "pair": [self.q, self.p],
            "dim": self.dim,
            "labels": list(self.labels),
            "invariant": self.invariant,
            "restricted_jordan_type": list(self.restricted_type),
            "matches_irreducible": self.matches_irreducible,
        }


@dataclass(frozen=True)
class DecompositionReport:
    alpha: Vector
    alpha_label: str
    jordan_type: tuple
    jordan_chains: tuple
    chain_spaces: tuple
    dim: int

    def to_json(self) -> dict:
        return {
            "alpha": la.format_vector(self.alpha),
            "alpha_label": self.alpha_label,
            "nilradical_dim": self.dim,
            "jordan_type": list(self.jordan_type),
            "chain_spaces": [c.to_json() for c in self.chain_spaces],
            "all_invariant": all(c.invariant for c in self.chain_spaces),
            "all_match": all(c.matches_irreducible for c in self.chain_spaces),
        }


def _submatrix(m: Matrix, idx) -> Matrix:
    return Matrix.from_rows([[m[i, j] for j in idx] for i in idx])


def _preserves(ad: Matrix, idx) -> bool:
    inside = set(idx)
    for j in idx:
        col = ad.column(j)
        if any(c != 0 and i not in inside for i, c in enumerate(col)):
            return False
    return True


def decompose_adjoint(alg: NilradicalAlgebra, sub: RootSubalgebra) -> DecompositionReport:
    """Jordan type of ad_{X_-a} and the chain spaces of all root strings in direction a.

    Chain spaces are indexed by the top of each maximal unbroken string, so
    they partition the basis. The comparison flags are reported, not asserted.
    """
    rs = alg.roots
    alpha = sub.alpha
    ad_minus = adjoint_matrix(alg, sub.x_minus)
    gens = [adjoint_matrix(alg, i) for i in (sub.x_plus, sub.x_minus, sub.h)]
    chains = jordan_chains(ad_minus)

    spaces = []
    for beta in rs.with_zero():
        if la.add(beta, alpha) in rs:
            continue  # not the top of its string
        ch = extremal_chain(rs, beta, alpha)
        idx = tuple(alg.index(v) for v in ch.elements)
        invariant = all(_preserves(g, idx) for g in gens)
        rtype = tuple(jordan_type(_submatrix(ad_minus, idx))) if invariant else ()
        spaces.append(ChainSpace(beta, ch.pair.q, ch.pair.p, idx,
                                 tuple(alg.labels[i] for i in idx), invariant, rtype))
    spaces.sort(key=lambda c: (-c.dim, c.top))
    return DecompositionReport(alpha, alg.labels[sub.x_plus], tuple(len(c) for c in chains),
                               tuple(tuple(c) for c in chains), tuple(spaces), alg.dim)


def sandwich_index(alg: NilradicalAlgebra) -> int:
    """Largest nilpotency index of ad over the basis (at most 2 for a sandwich)."""
    return max(nilpotency_index(adjoint_matrix(alg, lab)) for lab in alg.labels)
