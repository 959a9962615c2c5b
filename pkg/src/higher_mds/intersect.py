"""Generic intersection dimension of column spans, three ways.

For a set family A_1..A_l of [n] and a generic k x n matrix W, the
dimension of W_{A_1} cap ... cap W_{A_l} is computed by

* the partition formula (exact, l <= 12),
* a cutting-plane linear program over the multiplicities (exact, l <= 20),
* random substitution into the block matrix L_A(W) (Monte Carlo).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import CapacityError
from .linalg import MatrixFp, PrimeField, make_rng, random_elements, random_matrix, rank
from .lp import maximize
from .patterns import (
    PARTITION_CAP,
    IndexPartition,
    SetFamily,
    bits,
    max_partition_value,
    subset_intersections,
)

LP_CAP = 20


@dataclass(frozen=True)
class GenericDimResult:
    dimension: int
    partition: IndexPartition | None
    engine: str
    error_bound: Fraction | None = None
    deltas: tuple[int, ...] | None = None
    details: dict = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class DualLpCertificate:
    """Weights mu_I (0-based index tuples) proving the LP optimum from the other side."""

    weights: dict[tuple[int, ...], Fraction]
    objective: Fraction
    source: str


def check_dual_certificate(family: SetFamily, cert: DualLpCertificate) -> bool:
    """Dual feasibility and the claimed objective k - sum (k - |A_I|) mu_I."""
    k = family.k
    cover = [Fraction(0)] * family.ell
    obj = Fraction(k)
    for I, mu in cert.weights.items():
        if mu < 0 or not I:
            return False
        for i in I:
            cover[i] += mu
        obj -= (k - len(family.intersection(I))) * mu
    return all(c >= 1 for c in cover) and obj == cert.objective


# ---------------------------------------------------------------------------
# partition engine


def generic_dim_partition(family: SetFamily) -> GenericDimResult:
    if family.ell > PARTITION_CAP:
        raise CapacityError(f"partition engine needs l <= {PARTITION_CAP}, got {family.ell}")
    val, part = max_partition_value(family.masks, family.k)
    return GenericDimResult(val, part, "partition")


# ---------------------------------------------------------------------------
# LP engine


@dataclass(frozen=True)
class Separation:
    feasible: bool
    subset: tuple[int, ...]  # a minimiser of f over nonempty I
    value: Fraction


def submodular_f(family: SetFamily, deltas: Sequence[Fraction | int], subset: Sequence[int]) -> Fraction:
    """k - |A_I| - sum_{i in I} delta_i, with A of the empty index set taken as [n]."""
    inter = family.intersection(subset)
    return family.k - len(inter) - sum((Fraction(deltas[i]) for i in subset), Fraction(0))


def separation_oracle(family: SetFamily, deltas: Sequence[Fraction | int]) -> Separation:
    """Brute-force minimiser of the separation function over nonempty I."""
    ell = family.ell
    if ell > LP_CAP:
        raise CapacityError(f"separation by enumeration needs l <= {LP_CAP}")
    if len(deltas) != ell:
        raise ValueError("one multiplicity per set expected")
    deltas = [Fraction(x) for x in deltas]
    if any(x < 0 for x in deltas):
        raise ValueError("multiplicities must be non-negative")
    inter = subset_intersections(family.masks, (1 << family.n) - 1)
    k = family.k
    dsum = [Fraction(0)] * (1 << ell)
    best, arg = None, 0
    for I in range(1, 1 << ell):
        low = (I & -I).bit_length() - 1
        dsum[I] = dsum[I & (I - 1)] + deltas[low]
        f = k - inter[I].bit_count() - dsum[I]
        if best is None or f < best:
            best, arg = f, I
    return Separation(best >= 0, bits(arg), best)


def generic_dim_lp(family: SetFamily, max_rounds: int | None = None) -> tuple[GenericDimResult, DualLpCertificate]:
    """Minimise k - sum(delta) subject to sum_{i in I} delta_i <= k - |A_I|.

    Constraints are generated lazily from the separation oracle, starting
    from the singletons. The optimum is asserted integral.
    """
    ell, k = family.ell, family.k
    if ell > LP_CAP:
        raise CapacityError(f"LP engine needs l <= {LP_CAP}, got {ell}")
    cuts: list[tuple[int, ...]] = [(i,) for i in range(ell)]
    seen = set(cuts)
    rounds = 0
    while True:
        A = [[1 if i in I else 0 for i in range(ell)] for I in cuts]
        b = [k - len(family.intersection(I)) for I in cuts]
        sol = maximize(A, b, [1] * ell)
        sep = separation_oracle(family, sol.x)
        rounds += 1
        if sep.feasible:
            break
        if sep.subset in seen:
            raise AssertionError("separation returned a constraint already present")
        seen.add(sep.subset)
        cuts.append(sep.subset)
        if max_rounds is not None and rounds >= max_rounds:
            raise CapacityError("cutting-plane round limit reached")

    optimum = k - sol.value
    if optimum.denominator != 1:
        raise AssertionError(f"non-integral LP optimum {optimum}")
    lp_weights = {I: y for I, y in zip(cuts, sol.duals) if y != 0}
    lp_cert = DualLpCertificate(lp_weights, k - sum(
        ((k - len(family.intersection(I))) * y for I, y in lp_weights.items()), Fraction(0)), "simplex")
    if not check_dual_certificate(family, lp_cert) or lp_cert.objective != optimum:
        raise AssertionError("simplex duals do not certify the optimum")

    partition = None
    cert = lp_cert
    if ell <= PARTITION_CAP:
        val, partition = max_partition_value(family.masks, k)
        cert = DualLpCertificate({b: Fraction(1) for b in partition.blocks}, Fraction(val), "partition")
    deltas = tuple(int(x) if x.denominator == 1 else x for x in sol.x)
    details = {"cuts": len(cuts), "rounds": rounds, "pivots": sol.pivots}
    return GenericDimResult(int(optimum), partition, "lp", None, deltas, details), cert


# ---------------------------------------------------------------------------
# linear matrix and randomized engine


@dataclass(frozen=True)
class LinearMatrixInstance:
    """Block matrix with (l-1) row blocks of height k.

    Column block 0 holds W restricted to A_1 in every row block; column
    block i (i >= 1) holds W restricted to A_{i+1} in row block i-1 only.
    ``col_blocks[i]`` lists the matrix columns belonging to set i, and
    ``col_labels[c]`` the ground-set element (1-based) behind column c.
    """

    matrix: MatrixFp
    k: int
    col_blocks: tuple[tuple[int, ...], ...]
    col_labels: tuple[int, ...]


def build_linear_matrix(family: SetFamily, w: MatrixFp) -> LinearMatrixInstance:
    k, n = family.k, family.n
    if w.shape != (k, n):
        raise ValueError(f"expected a {k} x {n} matrix, got {w.shape[0]} x {w.shape[1]}")
    sets = [sorted(s) for s in family.sets]
    col_blocks, labels = [], []
    c = 0
    for s in sets:
        col_blocks.append(tuple(range(c, c + len(s))))
        labels.extend(s)
        c += len(s)
    rows = []
    for blk in range(1, family.ell):
        for r in range(k):
            row = [0] * c
            wr = w.rows[r]
            for col, e in zip(col_blocks[0], sets[0]):
                row[col] = wr[e - 1]
            for col, e in zip(col_blocks[blk], sets[blk]):
                row[col] = wr[e - 1]
            rows.append(tuple(row))
    return LinearMatrixInstance(MatrixFp(w.field, tuple(rows), c), k, tuple(col_blocks), tuple(labels))


def per_trial_error_bound(family: SetFamily, F: PrimeField) -> Fraction:
    """(l-1) n^2 / p: probability one random W underestimates the rank."""
    return min(Fraction(1), Fraction((family.ell - 1) * family.n ** 2, F.modulus))


def generic_dim_randomized(family: SetFamily, field: PrimeField, trials: int, seed: int) -> GenericDimResult:
    if field.modulus < 1 << 31:
        raise ValueError("randomized engine needs a modulus of at least 2^31")
    if trials < 1:
        raise ValueError("need at least one trial")
    total = sum(len(s) for s in family.sets)
    dims = []
    for t in range(trials):
        w = random_matrix(field, family.k, family.n, make_rng(seed, t))
        dims.append(total - rank(build_linear_matrix(family, w).matrix))
    d = min(dims)
    per = per_trial_error_bound(family, field)
    return GenericDimResult(d, None, "randomized", per ** trials, None, {
        "per_trial": dims,
        "agreeing_trials": dims.count(d),
        "per_trial_error_bound": per,
        "seed": seed,
        "prime": field.modulus,
    })


def _blow_up_once(family: SetFamily, t: int, F: PrimeField, rng: np.random.Generator) -> int:
    k, n = family.k, family.n
    blocks = [[random_elements(F, t * t, rng) for _ in range(n)] for _ in range(k)]
    sets = [sorted(s) for s in family.sets]
    offs = [0]
    for s in sets:
        offs.append(offs[-1] + len(s) * t)
    ncols = offs[-1]
    rows = []
    for blk in range(1, family.ell):
        for r in range(k):
            for a in range(t):
                row = [0] * ncols
                for which in (0, blk):
                    for pos, e in enumerate(sets[which]):
                        b = blocks[r][e - 1]
                        base = offs[which] + pos * t
                        for c in range(t):
                            row[base + c] = b[a * t + c]
                rows.append(tuple(row))
    return rank(MatrixFp(F, tuple(rows), ncols))


def blow_up_rank(family: SetFamily, t: int, field: PrimeField, seed: int, repeats: int = 3) -> int:
    """Rank of L_A with every variable replaced by a random t x t block (max over repeats)."""
    if t not in (1, 2, 3):
        raise ValueError("blow-up size t must be 1, 2 or 3")
    if field.modulus < 1 << 31:
        raise ValueError("blow-up rank needs a modulus of at least 2^31")
    return max(_blow_up_once(family, t, field, make_rng(seed, t, r)) for r in range(repeats))


def generic_dim(family: SetFamily) -> int:
    """Exact dimension through the cheapest exact engine that applies."""
    if family.ell <= PARTITION_CAP:
        return generic_dim_partition(family).dimension
    return generic_dim_lp(family)[0].dimension


def is_null_intersecting(family: SetFamily) -> bool:
    return generic_dim(family) == 0
