"""Exact linear algebra over prime fields and over the rationals.

Matrices are immutable (rows stored as tuples of ints already reduced
modulo the field). All routines use plain Gaussian elimination with
first-nonzero pivoting; over an exact field no pivoting heuristic is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

MERSENNE_61 = (1 << 61) - 1

RNG_ALGORITHM = "numpy.random.PCG64 seeded by numpy.random.SeedSequence([seed, *keys])"

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin; exact for every m < 3.3e24."""
    if m < 2:
        return False
    for q in _MR_BASES:
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    modulus: int

    def __post_init__(self):
        if not (2 <= self.modulus < 1 << 62):
            raise ValueError(f"modulus {self.modulus} outside [2, 2^62)")
        if not is_prime(self.modulus):
            raise ValueError(f"modulus {self.modulus} is not prime")

    @property
    def p(self) -> int:
        return self.modulus

    def __call__(self, x: int) -> int:
        return x % self.modulus

    def inv(self, x: int) -> int:
        x %= self.modulus
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.modulus)

    def __repr__(self) -> str:
        return f"GF({self.modulus})"


def GF(p: int) -> PrimeField:
    return PrimeField(p)


@dataclass(frozen=True)
class MatrixFp:
    field: PrimeField
    rows: tuple[tuple[int, ...], ...]
    ncols: int = -1

    def __post_init__(self):
        p = self.field.modulus
        rows = tuple(tuple(int(x) % p for x in r) for r in self.rows)
        ncols = self.ncols
        if ncols < 0:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "ncols", ncols)

    @classmethod
    def from_rows(cls, F: PrimeField, rows: Iterable[Iterable[int]], ncols: int = -1) -> "MatrixFp":
        return cls(F, tuple(tuple(r) for r in rows), ncols)

    @classmethod
    def zeros(cls, F: PrimeField, r: int, c: int) -> "MatrixFp":
        return cls(F, tuple((0,) * c for _ in range(r)), c)

    @classmethod
    def identity(cls, F: PrimeField, k: int) -> "MatrixFp":
        return cls(F, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)), k)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self, cols: Sequence[int]) -> "MatrixFp":
        return MatrixFp(self.field, tuple(tuple(r[j] for j in cols) for r in self.rows), len(cols))

    def transpose(self) -> "MatrixFp":
        return MatrixFp(self.field, tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    @property
    def T(self) -> "MatrixFp":
        return self.transpose()

    def __matmul__(self, other: "MatrixFp") -> "MatrixFp":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        p = self.field.modulus
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        out = tuple(tuple(sum(a * b for a, b in zip(r, c)) % p for c in cols) for r in self.rows)
        return MatrixFp(self.field, out, other.ncols)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix-vector product M v."""
        p = self.field.modulus
        if len(v) != self.ncols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(r, v)) % p for r in self.rows)

    def vstack(self, other: "MatrixFp") -> "MatrixFp":
        if self.ncols != other.ncols:
            raise ValueError("column mismatch")
        return MatrixFp(self.field, self.rows + other.rows, self.ncols)

    def to_lists(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def to_text(self) -> str:
        lines = [f"{self.field.modulus} {self.nrows} {self.ncols}"]
        lines += [" ".join(str(x) for x in r) for r in self.rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "MatrixFp":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty matrix text")
        p, r, c = (int(x) for x in lines[0].split())
        body = lines[1:]
        if len(body) != r:
            raise ValueError(f"expected {r} rows, found {len(body)}")
        rows = []
        for ln in body:
            vals = [int(x) for x in ln.split()]
            if len(vals) != c:
                raise ValueError(f"expected {c} entries per row")
            if any(not 0 <= x < p for x in vals):
                raise ValueError("entries must be residues in [0, p)")
            rows.append(vals)
        return cls.from_rows(PrimeField(p), rows, c)


# ---------------------------------------------------------------------------
# elimination core (lists of lists, in place)


def _rref_inplace(a: list[list[int]], ncols: int, p: int) -> list[int]:
    """Reduce ``a`` to reduced row echelon form; return pivot columns."""
    pivots = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        row = a[r]
        inv = pow(row[c], -1, p)
        if inv != 1:
            row = [x * inv % p for x in row]
            a[r] = row
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    a[i] = [(x - f * y) % p for x, y in zip(a[i], row)]
        pivots.append(c)
        r += 1
    return pivots


def _rank_lists(a: list[list[int]], ncols: int, p: int) -> int:
    # forward elimination only
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        row = a[r]
        inv = pow(row[c], -1, p)
        for i in range(r + 1, nrows):
            f = a[i][c]
            if f:
                f = f * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], row)]
        r += 1
    return r


def rank(m: MatrixFp) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    # eliminate along the shorter side
    if m.ncols < m.nrows:
        a = [list(c) for c in zip(*m.rows)]
        return _rank_lists(a, m.nrows, m.field.modulus)
    return _rank_lists([list(r) for r in m.rows], m.ncols, m.field.modulus)


def rref(m: MatrixFp) -> tuple[MatrixFp, list[int]]:
    a = [list(r) for r in m.rows]
    piv = _rref_inplace(a, m.ncols, m.field.modulus)
    return MatrixFp(m.field, tuple(tuple(r) for r in a), m.ncols), piv


def _kernel_vectors(a: list[list[int]], ncols: int, p: int) -> list[tuple[int, ...]]:
    piv = _rref_inplace(a, ncols, p)
    pivset = set(piv)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for i, c in enumerate(piv):
            v[c] = (-a[i][free]) % p
        basis.append(tuple(v))
    return basis


# ---------------------------------------------------------------------------
# subspaces


@dataclass(frozen=True)
class Subspace:
    """Span of linearly independent vectors in F^ambient."""

    field: PrimeField
    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, F: PrimeField, ambient: int, vectors: Iterable[Sequence[int]]) -> "Subspace":
        p = F.modulus
        a = [[x % p for x in v] for v in vectors]
        if any(len(v) != ambient for v in a):
            raise ValueError("vector length differs from ambient dimension")
        piv = _rref_inplace(a, ambient, p)
        return cls(F, ambient, tuple(tuple(a[i]) for i in range(len(piv))))

    @classmethod
    def zero(cls, F: PrimeField, ambient: int) -> "Subspace":
        return cls(F, ambient, ())

    @classmethod
    def full(cls, F: PrimeField, ambient: int) -> "Subspace":
        return cls(F, ambient, MatrixFp.identity(F, ambient).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def as_matrix(self) -> MatrixFp:
        """Basis vectors as rows."""
        return MatrixFp(self.field, self.basis, self.ambient)

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.ambient:
            raise ValueError("vector length differs from ambient dimension")
        p = self.field.modulus
        a = [list(b) for b in self.basis] + [[x % p for x in v]]
        return _rank_lists(a, self.ambient, p) == self.dim

    def perp(self) -> "Subspace":
        """Orthogonal complement under the standard bilinear form."""
        if self.dim == 0:
            return Subspace.full(self.field, self.ambient)
        a = [list(b) for b in self.basis]
        return Subspace(self.field, self.ambient,
                        tuple(_kernel_vectors(a, self.ambient, self.field.modulus)))

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(b) for b in self.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient == other.ambient
                and self.dim == other.dim and self <= other)

    def __hash__(self) -> int:
        return hash((self.field, self.ambient, self.dim))


def kernel_basis(m: MatrixFp) -> Subspace:
    """Basis of {x : M x = 0}."""
    if m.nrows == 0:
        return Subspace.full(m.field, m.ncols)
    vecs = _kernel_vectors([list(r) for r in m.rows], m.ncols, m.field.modulus)
    return Subspace(m.field, m.ncols, tuple(vecs))


def column_span(m: MatrixFp, cols: Iterable[int] | None = None) -> Subspace:
    cols = range(m.ncols) if cols is None else cols
    return Subspace.span(m.field, m.nrows, (m.column(j) for j in cols))


def subspace_intersection(spaces: Sequence[Subspace]) -> Subspace:
    """Intersection of subspaces as the annihilator of the summed complements."""
    if not spaces:
        raise ValueError("need at least one subspace")
    F, k = spaces[0].field, spaces[0].ambient
    for s in spaces:
        if s.ambient != k or s.field != F:
            raise ValueError("subspaces live in different ambient spaces")
    rows: list[list[int]] = []
    for s in spaces:
        rows.extend(list(v) for v in s.perp().basis)
    if not rows:
        return Subspace.full(F, k)
    return Subspace(F, k, tuple(_kernel_vectors(rows, k, F.modulus)))


def solve(m: MatrixFp, b: Sequence[int]) -> tuple[int, ...] | None:
    """One solution x of M x = b, or None when the system is inconsistent."""
    p = m.field.modulus
    if len(b) != m.nrows:
        raise ValueError("right-hand side length mismatch")
    a = [list(r) + [x % p] for r, x in zip(m.rows, b)]
    piv = _rref_inplace(a, m.ncols + 1, p)
    if piv and piv[-1] == m.ncols:
        return None
    x = [0] * m.ncols
    for i, c in enumerate(piv):
        x[c] = a[i][m.ncols]
    return tuple(x)


def inverse(m: MatrixFp) -> MatrixFp:
    k = m.nrows
    if m.ncols != k:
        raise ValueError("inverse of non-square matrix")
    p = m.field.modulus
    a = [list(r) + [int(i == j) for j in range(k)] for i, r in enumerate(m.rows)]
    piv = _rref_inplace(a, k, p)
    if len(piv) < k:
        raise ZeroDivisionError("matrix is singular")
    return MatrixFp(m.field, tuple(tuple(r[k:]) for r in a), k)


def determinant(m: MatrixFp) -> int:
    k = m.nrows
    if m.ncols != k:
        raise ValueError("determinant of non-square matrix")
    p = m.field.modulus
    a = [list(r) for r in m.rows]
    det = 1
    for c in range(k):
        piv = next((i for i in range(c, k) if a[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c] % p
        inv = pow(a[c][c], -1, p)
        for i in range(c + 1, k):
            f = a[i][c]
            if f:
                f = f * inv % p
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[c])]
    return det % p


# ---------------------------------------------------------------------------
# randomness


def make_rng(seed: int, *keys: int) -> np.random.Generator:
    """Independent stream for (seed, *keys); same arguments give the same stream."""
    if seed < 0 or any(k < 0 for k in keys):
        raise ValueError("seeds and keys must be non-negative")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *keys])))


def random_elements(F: PrimeField, count: int, rng: np.random.Generator) -> list[int]:
    return [int(x) for x in rng.integers(0, F.modulus, size=count, dtype=np.int64)]


def random_matrix(F: PrimeField, nrows: int, ncols: int, seed: int | np.random.Generator) -> MatrixFp:
    rng = seed if isinstance(seed, np.random.Generator) else make_rng(seed)
    flat = random_elements(F, nrows * ncols, rng)
    return MatrixFp(F, tuple(tuple(flat[i * ncols:(i + 1) * ncols]) for i in range(nrows)), ncols)


# ---------------------------------------------------------------------------
# rationals


def rational_rref(rows: Sequence[Sequence[Fraction | int]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q; Fraction keeps entries in lowest terms."""
    a = [[Fraction(x) for x in r] for r in rows]
    ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][c]
        a[r] = [x / lead for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rational_rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    return len(rational_rref(rows)[1])
