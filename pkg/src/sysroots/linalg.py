"""Exact rational vectors and matrices.

Vectors are plain tuples of :class:`fractions.Fraction`; tuples compare
lexicographically, which gives the deterministic ordering used everywhere in
the package. Matrices are a small immutable wrapper over row tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction, str]
Vector = tuple  # tuple[Fraction, ...]


class LinalgError(ValueError):
    """Raised on dimension mismatches and non-nilpotent inputs."""


def rational(x: Scalar) -> Fraction:
    """Coerce an int, Fraction or "a/b" string to a Fraction.

    Floats are refused: they would smuggle rounding into an exact kernel.
    """
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact scalar {x!r}")
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def vec(*entries: Scalar) -> Vector:
    return tuple(rational(e) for e in entries)


def as_vector(entries: Iterable[Scalar]) -> Vector:
    return tuple(rational(e) for e in entries)


def zero(dim: int) -> Vector:
    return (Fraction(0),) * dim


def _check_dims(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise LinalgError(f"dimension mismatch: {len(a)} vs {len(b)}")


def add(a: Vector, b: Vector) -> Vector:
    _check_dims(a, b)
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Vector, b: Vector) -> Vector:
    _check_dims(a, b)
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Vector) -> Vector:
    return tuple(-x for x in a)


def scale(c: Scalar, a: Vector) -> Vector:
    c = rational(c)
    return tuple(c * x for x in a)


def dot(a: Sequence, b: Sequence) -> Fraction:
    _check_dims(a, b)
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def is_zero(a: Vector) -> bool:
    return all(x == 0 for x in a)


def format_scalar(x: Fraction) -> str:
    # str(Fraction) is already "a" or "a/b" in lowest terms with b > 0
    return str(x)


def format_vector(a: Vector) -> list[str]:
    return [format_scalar(x) for x in a]


def show_vector(a: Vector) -> str:
    """Compact form for messages, e.g. ``(1/2,0,-1)``."""
    return "(" + ",".join(format_vector(a)) + ")"


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators so Bareiss stays in ZZ."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            d = Fraction(x).denominator
            den = den * d // _gcd(den, d)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _bareiss_rank(m: list[list[int]]) -> int:
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    m = [row[:] for row in m]
    rank = 0
    prev = 1
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r][c] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, rows):
            for k in range(c + 1, cols):
                m[r][k] = (m[r][k] * p - m[r][c] * m[rank][k]) // prev
            m[r][c] = 0
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def rank(vectors: Sequence[Vector]) -> int:
    """Dimension of the rational span of ``vectors`` (fraction-free elimination)."""
    vectors = list(vectors)
    if not vectors:
        return 0
    dim = len(vectors[0])
    for v in vectors:
        if len(v) != dim:
            raise LinalgError(f"dimension mismatch: {len(v)} vs {dim}")
    if dim == 0:
        return 0
    return _bareiss_rank(_integer_rows(vectors))


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[Vector]:
    """Basis of {x : rows @ x = 0}, read off the reduced row echelon form.

    Basis vectors are ordered by their free column, each with a 1 there.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -m[i][f]
        basis.append(tuple(x))
    return basis


@dataclass(frozen=True)
class Matrix:
    """Immutable exact matrix stored as a tuple of row tuples."""

    rows: tuple

    def __post_init__(self):
        width = {len(r) for r in self.rows}
        if len(width) > 1:
            raise LinalgError("ragged matrix rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]]) -> "Matrix":
        return cls(tuple(as_vector(r) for r in rows))

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls(tuple(zero(ncols) for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def lower_jordan_block(cls, n: int) -> "Matrix":
        """n x n matrix with ones on the subdiagonal."""
        return cls(tuple(tuple(Fraction(int(i == j + 1)) for j in range(n)) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        n, m = self.shape
        return Matrix(tuple(self.column(j) for j in range(m)))

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.rows)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.shape[1]:
            raise LinalgError(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        return tuple(dot(r, v) for r in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.shape[1] != other.shape[0]:
            raise LinalgError(f"shape mismatch {self.shape} @ {other.shape}")
        # row-by-row accumulation skips zero entries; adjoint matrices are very sparse
        width = other.shape[1]
        out = []
        for r in self.rows:
            acc = [Fraction(0)] * width
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(other.rows[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix(tuple(out))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise LinalgError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix(tuple(add(a, b) for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise LinalgError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix(tuple(sub(a, b) for a, b in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(neg(r) for r in self.rows))

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square:
            raise LinalgError("power of non-square matrix")
        out = Matrix.identity(self.shape[0])
        for _ in range(k):
            out = out @ self
        return out

    def rank(self) -> int:
        return rank(list(self.rows)) if self.rows else 0

    def to_json(self) -> list[list[str]]:
        return [format_vector(r) for r in self.rows]


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def nilpotency_index(m: Matrix) -> int:
    """Smallest k >= 0 with m**k == 0.

    The zero matrix has index 1 (the 0x0 matrix has index 0).
    """
    if not m.is_square:
        raise LinalgError(f"nilpotency of non-square {m.shape} matrix")
    n = m.shape[0]
    if n == 0:
        return 0
    p = m
    for k in range(1, n + 1):
        if p.is_zero():
            return k
        p = p @ m
    raise LinalgError("matrix is not nilpotent")


def jordan_chains(m: Matrix) -> list[list[Vector]]:
    """Split the space into Jordan chains ``[w, m w, ..., m^k w]`` of a nilpotent m.

    Chains come longest first; equal lengths are ordered by their top vector.
    Tops are picked greedily from the canonical nullspace bases of the powers
    of m, so the output is deterministic.
    """
    index = nilpotency_index(m)
    n = m.shape[0]
    if n == 0:
        return []
    # kernels[k] = basis of ker m^k
    powers = [Matrix.identity(n)]
    for _ in range(index):
        powers.append(powers[-1] @ m)
    kernels = [nullspace(p.rows, n) for p in powers]

    chains: list[list[Vector]] = []
    for length in range(index, 0, -1):
        # Everything already accounted for at this level: ker m^(length-1)
        # plus the level-`length` vectors of longer chains.
        span = list(kernels[length - 1])
        for ch in chains:
            span.append(ch[len(ch) - length])
        current = rank(span) if span else 0
        tops = []
        for cand in sorted(kernels[length]):
            if rank(span + [cand]) > current:
                span.append(cand)
                current += 1
                tops.append(cand)
        for top in tops:
            chain = [top]
            for _ in range(length - 1):
                chain.append(m.apply(chain[-1]))
            chains.append(chain)
    chains.sort(key=lambda ch: (-len(ch), ch[0]))
    return chains


def jordan_type(m: Matrix) -> list[int]:
    """Block sizes of a nilpotent matrix, in decreasing order."""
    return [len(ch) for ch in jordan_chains(m)]
