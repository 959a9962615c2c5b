"""Witness transformations between MDS(l) failures and list-decoding failures,
and the block matrix M_{G,(J_1..J_t)} whose full column rank is tested.

Conventions: ``parity`` is the matrix whose column spans are intersected
(the generator of the dual code). Column indices of matrices are 0-based,
ground-set elements inside families are 1-based.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .codes import LdMdsWitness, LinearCode, check_ldmds_witness, mds_violation, parity_check
from .errors import PreconditionError
from .intersect import build_linear_matrix, generic_dim_partition, is_null_intersecting
from .linalg import MatrixFp, column_span, kernel_basis, rank, solve, subspace_intersection
from .patterns import SetFamily


@dataclass(frozen=True)
class IntersectionWitness:
    """Nonzero z in every span G_{A_i}, with u_i supported on A_i and G u_i = z."""

    family: SetFamily
    z: tuple[int, ...]
    preimages: tuple[tuple[int, ...], ...]


def check_intersection_witness(g: MatrixFp, w: IntersectionWitness) -> bool:
    if not any(w.z) or len(w.preimages) != w.family.ell:
        return False
    if g.nrows != w.family.k or g.ncols != w.family.n:
        return False
    for A, u in zip(w.family.sets, w.preimages):
        if len(u) != g.ncols or any(u[j] % g.field.p for j in range(g.ncols) if j + 1 not in A):
            return False
        if g.apply(u) != tuple(x % g.field.p for x in w.z):
            return False
    return is_null_intersecting(w.family)


def find_intersection_witness(g: MatrixFp, family: SetFamily) -> IntersectionWitness | None:
    """A nonzero common vector of the spans g_{A_i} with explicit preimages, or None."""
    p = g.field.modulus
    inst = build_linear_matrix(family, g)
    n = g.ncols
    if family.ell == 1:
        basis = [tuple(int(i == j) for j in range(len(inst.col_labels))) for i in range(len(inst.col_labels))]
    else:
        basis = list(kernel_basis(inst.matrix).basis)
    for x in basis:
        us = []
        for i, cols in enumerate(inst.col_blocks):
            u = [0] * n
            sign = 1 if i == 0 else -1
            for c in cols:
                u[inst.col_labels[c] - 1] = sign * x[c] % p
            us.append(tuple(u))
        z = g.apply(us[0])
        if any(z):
            return IntersectionWitness(family, z, tuple(us))
    return None


def mds_violation_to_ldmds(code: LinearCode, witness: IntersectionWitness,
                           parity: MatrixFp | None = None) -> LdMdsWitness:
    """Group equal preimages; the distinct ones are an LD-MDS(s-1) witness for ``code``.

    ``parity`` defaults to the parity check of ``code`` and must be the
    matrix the intersection witness was computed against.
    """
    H = parity_check(code) if parity is None else parity
    if not check_intersection_witness(H, witness):
        raise PreconditionError("intersection witness does not verify against the parity check")
    distinct: list[tuple[int, ...]] = []
    for u in witness.preimages:
        if u not in distinct:
            distinct.append(u)
    s = len(distinct)
    if s == 1:
        # the single vector would need weight <= 0 while mapping to z != 0
        raise PreconditionError("all preimages coincide; impossible for a null-intersecting family")
    out = LdMdsWitness(s - 1, tuple(distinct), tuple(witness.z))
    if not check_ldmds_witness(code, out):
        raise AssertionError("grouped witness failed verification")
    return out


def ldmds_witness_from_family(code: LinearCode, parity: MatrixFp, family: SetFamily) -> LdMdsWitness:
    """Turn an MDS(l) violation of the dual (generator ``parity``) into an LD-MDS witness of ``code``."""
    if not is_null_intersecting(family):
        # the dual is not MDS: a dependent (n-k)-set of parity columns carries a codeword
        A = sorted(family.sets[0])
        ker = kernel_basis(parity.columns([e - 1 for e in A]))
        if ker.dim == 0:
            raise PreconditionError("family is not a violation")
        c = [0] * code.n
        for e, x in zip(A, ker.basis[0]):
            c[e - 1] = x
        w = LdMdsWitness(1, ((0,) * code.n, tuple(c)), (0,) * parity.nrows)
        if not check_ldmds_witness(code, w):
            raise AssertionError("codeword witness failed verification")
        return w
    iw = find_intersection_witness(parity, family)
    if iw is None:
        raise PreconditionError("family has zero intersection in the given matrix")
    return mds_violation_to_ldmds(code, iw, parity)


@dataclass(frozen=True)
class MdsGapReport:
    """Family J_1..J_l of the dual's columns whose actual intersection dimension is not the generic one.

    For an MDS dual the gap is positive; a non-MDS dual shows up as a
    repeated dependent set, where the gap is negative.
    """

    family: SetFamily
    actual_dim: int
    actual_dim_kernel_route: int
    generic_dim: int
    normalized: bool

    @property
    def gap(self) -> int:
        return self.actual_dim - self.generic_dim

    @property
    def confirmed(self) -> bool:
        return self.actual_dim == self.actual_dim_kernel_route and self.gap != 0


def intersection_dim_two_ways(g: MatrixFp, family: SetFamily) -> tuple[int, int]:
    """dim of the common span via annihilators, and via the kernel of L_A(g) minus block nullities."""
    direct = subspace_intersection([column_span(g, [e - 1 for e in sorted(A)]) for A in family.sets]).dim
    inst = build_linear_matrix(family, g)
    total = len(inst.col_labels)
    if family.ell == 1:
        ker = total
    else:
        ker = total - rank(inst.matrix)
    null = sum(len(A) - rank(g.columns([e - 1 for e in sorted(A)])) for A in family.sets)
    return direct, ker - null


def ldmds_to_mds_violation(code: LinearCode, witness: LdMdsWitness,
                           parity: MatrixFp | None = None) -> MdsGapReport:
    """Supports of a list-decoding witness form a family where the dual misses the generic dimension.

    Supports larger than n-k are cut to their first n-k elements: for an MDS
    dual both the actual and the generic span are then the whole space, so
    neither dimension changes. A non-MDS code yields the repeated dependent
    set of dual columns instead.
    """
    if not check_ldmds_witness(code, witness):
        raise PreconditionError("LD-MDS witness does not verify")
    H = parity_check(code) if parity is None else parity
    r = code.n - code.k
    ell = witness.level + 1
    dual = LinearCode(H)
    bad = mds_violation(dual)
    normalized = False
    if bad is not None:
        fam = SetFamily(code.n, r, tuple(frozenset(j + 1 for j in bad) for _ in range(ell)))
        normalized = True
    else:
        sets = []
        for u in witness.vectors:
            J = [j + 1 for j in range(code.n) if u[j] % code.field.p]
            if len(J) > r:
                J = J[:r]
                normalized = True
            sets.append(frozenset(J))
        fam = SetFamily(code.n, r, tuple(sets))
    direct, via_kernel = intersection_dim_two_ways(H, fam)
    generic = generic_dim_partition(fam).dimension
    return MdsGapReport(fam, direct, via_kernel, generic, normalized)


# ---------------------------------------------------------------------------
# the agreement-set block matrix


@dataclass(frozen=True)
class St20Matrix:
    t: int
    k: int
    n: int
    js: tuple[frozenset[int], ...]
    matrix: MatrixFp
    pairs: tuple[tuple[int, int], ...]  # column block order, 0-based
    type_a_rows: int
    restricted_columns: tuple[int, ...]  # 1-based columns of G that appear (the union of the J's)


def _pairs(t: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(t), 2))


def build_st20_matrix(code: LinearCode, js: Sequence[Sequence[int]]) -> St20Matrix:
    """Type (a) rows first (pairs of [t-1] in order), then type (b) rows (pairs in order, elements ascending)."""
    t = len(js)
    if t < 2:
        raise ValueError("need t >= 2")
    n, k = code.n, code.k
    J = tuple(frozenset(x) for x in js)
    for s in J:
        if any(not 1 <= e <= n for e in s):
            raise ValueError(f"J set {sorted(s)} not inside [1, {n}]")
    G = code.generator
    p = code.field.modulus
    pairs = _pairs(t)
    block = {pr: b for b, pr in enumerate(pairs)}
    ncols = len(pairs) * k
    rows = []
    for i, j in _pairs(t - 1):
        for r in range(k):
            row = [0] * ncols
            row[block[(i, j)] * k + r] = 1
            row[block[(j, t - 1)] * k + r] = 1
            row[block[(i, t - 1)] * k + r] = p - 1
            rows.append(tuple(row))
    type_a = len(rows)
    for i, j in pairs:
        base = block[(i, j)] * k
        for e in sorted(J[i] & J[j]):
            row = [0] * ncols
            col = G.column(e - 1)
            row[base:base + k] = col
            rows.append(tuple(row))
    union = tuple(sorted(frozenset().union(*J)))
    return St20Matrix(t, k, n, J, MatrixFp(code.field, tuple(rows), ncols), tuple(pairs), type_a, union)


@dataclass(frozen=True)
class St20Report:
    hypothesis_holds: bool
    violating_subset: tuple[int, ...] | None  # 1-based indices of the J's
    full_column_rank: bool | None
    rank: int | None
    ncols: int
    restricted_columns: tuple[int, ...]


def st20_hypothesis(js: Sequence[Sequence[int]], k: int) -> tuple[int, ...] | None:
    """First S (0-based) breaking sum |J_i| - |union J_i| <= (|S|-1)k, or [t] when equality fails there."""
    J = [frozenset(x) for x in js]
    t = len(J)
    for size in range(1, t + 1):
        for S in itertools.combinations(range(t), size):
            lhs = sum(len(J[i]) for i in S) - len(frozenset().union(*(J[i] for i in S)))
            if lhs > (size - 1) * k:
                return S
    full = sum(len(x) for x in J) - len(frozenset().union(*J))
    if full != (t - 1) * k:
        return tuple(range(t))
    return None


def check_st20(code: LinearCode, js: Sequence[Sequence[int]]) -> St20Report:
    m = build_st20_matrix(code, js)
    bad = st20_hypothesis(js, code.k)
    if bad is not None:
        return St20Report(False, tuple(i + 1 for i in bad), None, None, m.matrix.ncols, m.restricted_columns)
    r = rank(m.matrix)
    return St20Report(True, None, r == m.matrix.ncols, r, m.matrix.ncols, m.restricted_columns)


def codeword_tuple_to_kernel(code: LinearCode, words: Sequence[Sequence[int]],
                             y: Sequence[int]) -> tuple[list[frozenset[int]], tuple[int, ...]]:
    """Agreement sets J_i = {a : c_i[a] = y[a]} and the vector of differences f_j - f_i.

    For distinct codewords the vector is nonzero and lies in the kernel of
    the matrix built from the J_i.
    """
    G = code.generator
    p = code.field.modulus
    Gt = G.transpose()
    fs = []
    for c in words:
        f = solve(Gt, c)
        if f is None:
            raise PreconditionError("word is not a codeword")
        fs.append(f)
    js = [frozenset(a + 1 for a in range(code.n) if c[a] % p == y[a] % p) for c in words]
    v: list[int] = []
    for i, j in _pairs(len(words)):
        v.extend((b - a) % p for a, b in zip(fs[i], fs[j]))
    return js, tuple(v)
