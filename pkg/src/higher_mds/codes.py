"""Linear codes over prime fields and the higher-order MDS predicates.

Predicates return ``True`` or a piece of evidence that can be checked on its
own: a violating set family, a zero pattern that cannot be attained, or an
explicit list-decoding witness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .errors import BudgetExceeded, PreconditionError
from .intersect import build_linear_matrix, generic_dim_partition
from .linalg import (
    RNG_ALGORITHM,
    MatrixFp,
    PrimeField,
    Subspace,
    _kernel_vectors,
    _rank_lists,
    kernel_basis,
    make_rng,
    random_elements,
    rank,
)
from .patterns import (
    SetFamily,
    ZeroPattern,
    ell_hall_violation,
    extend_to_maximal,
    from_mask,
    gzp_violation,
    max_partition_value,
)

DEFAULT_KERNEL_BUDGET = 10**6


@dataclass(frozen=True)
class LinearCode:
    generator: MatrixFp
    rs_points: tuple[int, ...] | None = None

    def __post_init__(self):
        if rank(self.generator) != self.generator.nrows:
            raise ValueError("generator matrix must have full row rank")
        if self.rs_points is not None:
            pts = tuple(self.field(x) for x in self.rs_points)
            if len(pts) != self.n:
                raise ValueError("need one evaluation point per column")
            object.__setattr__(self, "rs_points", pts)

    @property
    def field(self) -> PrimeField:
        return self.generator.field

    @property
    def k(self) -> int:
        return self.generator.nrows

    @property
    def n(self) -> int:
        return self.generator.ncols

    @classmethod
    def from_rows(cls, F: PrimeField, rows, n: int | None = None) -> "LinearCode":
        return cls(MatrixFp.from_rows(F, rows, -1 if n is None else n))


@dataclass(frozen=True)
class DecodingParams:
    rate: Fraction
    list_size: int
    radius: Fraction


# ---------------------------------------------------------------------------
# Reed-Solomon codes and duality


def vandermonde(F: PrimeField, points: Sequence[int], k: int) -> LinearCode:
    pts = [F(x) for x in points]
    if len(set(pts)) != len(pts):
        raise ValueError("evaluation points must be distinct")
    if not 0 <= k <= len(pts):
        raise ValueError("need 0 <= k <= n")
    p = F.modulus
    rows = [tuple(pow(a, r, p) for a in pts) for r in range(k)]
    return LinearCode(MatrixFp(F, tuple(rows), len(pts)), tuple(pts))


def grs_dual(code: LinearCode) -> LinearCode:
    """Parity check of an RS code: H[j][i] = a_i^j / prod_{m != i}(a_i - a_m)."""
    pts = code.rs_points
    if pts is None:
        raise ValueError("code carries no evaluation points")
    if len(pts) < 2:
        raise ValueError("need at least two evaluation points")
    if len(set(pts)) != len(pts):
        raise ValueError("evaluation points must be distinct")
    F = code.field
    p = F.modulus
    scale = []
    for i, a in enumerate(pts):
        d = 1
        for j, b in enumerate(pts):
            if j != i:
                d = d * (a - b) % p
        scale.append(F.inv(d))
    rows = [tuple(pow(a, j, p) * s % p for a, s in zip(pts, scale)) for j in range(code.n - code.k)]
    return LinearCode(MatrixFp(F, tuple(rows), code.n))


def dual_code(code: LinearCode) -> LinearCode:
    """Dual code; for RS codes this is the scaled-Vandermonde parity check."""
    if code.rs_points is not None and code.n >= 2:
        return grs_dual(code)
    return LinearCode(kernel_basis(code.generator).as_matrix())


def parity_check(code: LinearCode) -> MatrixFp:
    return dual_code(code).generator


# ---------------------------------------------------------------------------
# MDS and MDS(l)


def mds_violation(code: LinearCode) -> tuple[int, ...] | None:
    """First k-set of columns (0-based) that is linearly dependent, or None."""
    G = code.generator
    p = code.field.modulus
    cols = [G.column(j) for j in range(code.n)]
    for S in itertools.combinations(range(code.n), code.k):
        if _rank_lists([list(cols[j]) for j in S], code.k, p) < code.k:
            return S
    return None


def is_mds(code: LinearCode) -> bool:
    return mds_violation(code) is None


@lru_cache(maxsize=64)
def _null_families(n: int, k: int, ell: int) -> tuple[tuple[int, ...], ...]:
    """Multisets of l nonempty subsets (as masks) with sizes <= k, total (l-1)k, null-intersecting."""
    target = (ell - 1) * k
    subsets = sorted((m for m in range(1, 1 << n) if m.bit_count() <= k),
                     key=lambda m: (m.bit_count(), sorted(from_mask(m))))
    out = []

    def rec(start: int, chosen: list[int], left: int):
        slots = ell - len(chosen)
        if slots == 0:
            if left == 0 and max_partition_value(chosen, k)[0] == 0:
                out.append(tuple(chosen))
            return
        if left < slots or left > slots * k:
            return
        for idx in range(start, len(subsets)):
            m = subsets[idx]
            c = m.bit_count()
            if c * slots > left:
                break  # sizes are non-decreasing from here on
            chosen.append(m)
            rec(idx, chosen, left - c)
            chosen.pop()

    rec(0, [], target)
    return tuple(out)


def null_intersecting_families(n: int, k: int, ell: int) -> Iterator[SetFamily]:
    """Test families for MDS(l). Families containing an empty set are skipped (trivially zero)."""
    for masks in _null_families(n, k, ell):
        yield SetFamily(n, k, tuple(from_mask(m) for m in masks))


def is_mds_ell(code: LinearCode, ell: int, budget: int | None = None) -> bool | SetFamily:
    """MDS(l): every null-intersecting family of total size (l-1)k has zero intersection in G."""
    if ell < 1:
        raise ValueError("l must be at least 1")
    bad = mds_violation(code)
    if bad is not None:
        return SetFamily(code.n, code.k, tuple(frozenset(j + 1 for j in bad) for _ in range(ell)))
    if ell <= 2 or code.k == 0:
        return True
    fams = _null_families(code.n, code.k, ell)
    if budget is not None and len(fams) > budget:
        raise BudgetExceeded(f"{len(fams)} test families exceed budget {budget}")
    G = code.generator
    target = (ell - 1) * code.k
    for masks in fams:
        fam = SetFamily(code.n, code.k, tuple(from_mask(m) for m in masks))
        if rank(build_linear_matrix(fam, G).matrix) != target:
            return fam
    return True


# ---------------------------------------------------------------------------
# generic zero patterns


@dataclass(frozen=True)
class GzpCertificate:
    pattern: ZeroPattern
    m: MatrixFp
    maximal: ZeroPattern


@dataclass(frozen=True)
class AttainFailure:
    pattern: ZeroPattern
    maximal: ZeroPattern
    rank: int
    reason: str


@dataclass(frozen=True)
class MdsViolation:
    """k columns (1-based) of the generator that are linearly dependent."""

    columns: tuple[int, ...]


def check_gzp_certificate(code: LinearCode, cert: GzpCertificate) -> bool:
    m, G = cert.m, code.generator
    if m.shape != (code.k, code.k) or rank(m) != code.k:
        return False
    MG = m @ G
    return all(MG[i, e - 1] == 0 for i, s in enumerate(cert.pattern.sets) for e in s)


def _attain_maximal(code: LinearCode, pattern: ZeroPattern, maximal: ZeroPattern) -> GzpCertificate | AttainFailure:
    G, F, k = code.generator, code.field, code.k
    p = F.modulus
    rows: list[tuple[int, ...] | None] = [None] * k
    distinct, groups = maximal.groups()
    for s, rr in zip(distinct, groups):
        # left kernel of the columns in s
        cols = [list(G.column(e - 1)) for e in sorted(s)]
        basis = _kernel_vectors(cols, k, p)
        if len(basis) < len(rr):
            return AttainFailure(pattern, maximal, 0, "dual space smaller than multiplicity")
        for j, v in zip(rr, basis):
            rows[j] = v
    filled = [list(r) for r in rows if r is not None]
    r0 = _rank_lists([list(x) for x in filled], k, p)
    if r0 < len(filled):
        return AttainFailure(pattern, maximal, r0, "stacked dual bases are linearly dependent")
    # complete with standard basis vectors in order
    current = [list(x) for x in filled]
    e = 0
    for j in range(k):
        if rows[j] is not None:
            continue
        while True:
            v = [int(i == e) for i in range(k)]
            e += 1
            if _rank_lists([list(x) for x in current] + [v], k, p) > len(current):
                break
        rows[j] = tuple(v)
        current.append(v)
    cert = GzpCertificate(pattern, MatrixFp(F, tuple(rows), k), maximal)
    if not check_gzp_certificate(code, cert):
        raise AssertionError("constructed certificate failed verification")
    return cert


def attain_pattern(code: LinearCode, pattern: ZeroPattern) -> GzpCertificate | AttainFailure:
    """Invertible M with M G vanishing on the pattern, built from dual bases of a maximal extension."""
    if pattern.k != code.k or pattern.n != code.n:
        raise ValueError("pattern shape does not match the code")
    bad = gzp_violation(pattern)
    if bad is not None:
        raise PreconditionError("pattern is not a generic zero pattern", bad)
    return _attain_maximal(code, pattern, extend_to_maximal(pattern))


@lru_cache(maxsize=64)
def _maximal_patterns(n: int, k: int, ell: int) -> tuple[tuple[int, ...], ...]:
    subsets = sorted((m for m in range(1, 1 << n) if 1 <= m.bit_count() <= k - 1),
                     key=lambda m: (m.bit_count(), sorted(from_mask(m))))
    out = []

    def rec(start: int, chosen: list[int], used: int):
        if chosen:
            deltas = [k - m.bit_count() for m in chosen]
            if ell_hall_violation(chosen, k, deltas) is not None:
                return
            out.append(tuple(chosen))
        if len(chosen) == ell:
            return
        for idx in range(start, len(subsets)):
            m = subsets[idx]
            dlt = k - m.bit_count()
            if used + dlt > k:
                continue
            chosen.append(m)
            rec(idx + 1, chosen, used + dlt)
            chosen.pop()

    rec(0, [], 0)
    return tuple(out)


def maximal_patterns(n: int, k: int, ell: int) -> Iterator[ZeroPattern]:
    """Maximal generic zero patterns of order 1..l (distinct sets in sorted order)."""
    for masks in _maximal_patterns(n, k, ell):
        rows = []
        for m in masks:
            rows.extend([from_mask(m)] * (k - m.bit_count()))
        rows.extend([frozenset()] * (k - len(rows)))
        yield ZeroPattern(n, k, tuple(rows))


def is_gzp_ell(code: LinearCode, ell: int, budget: int | None = None) -> bool | ZeroPattern | MdsViolation:
    """GZP(l): MDS and attains every maximal generic zero pattern of order <= l."""
    bad = mds_violation(code)
    if bad is not None:
        return MdsViolation(tuple(j + 1 for j in bad))
    pats = _maximal_patterns(code.n, code.k, ell)
    if budget is not None and len(pats) > budget:
        raise BudgetExceeded(f"{len(pats)} maximal patterns exceed budget {budget}")
    for pat in maximal_patterns(code.n, code.k, ell):
        if isinstance(_attain_maximal(code, pat, pat), AttainFailure):
            return pat
    return True


# ---------------------------------------------------------------------------
# LD-MDS


@dataclass(frozen=True)
class LdMdsWitness:
    """Distinct u_0..u_level with equal syndromes and total weight <= level (n - k)."""

    level: int
    vectors: tuple[tuple[int, ...], ...]
    syndrome: tuple[int, ...]


def weight(v: Sequence[int]) -> int:
    return sum(1 for x in v if x)


def check_ldmds_witness(code: LinearCode, w: LdMdsWitness) -> bool:
    n, k = code.n, code.k
    p = code.field.modulus
    if w.level < 1 or len(w.vectors) != w.level + 1:
        return False
    vecs = [tuple(x % p for x in v) for v in w.vectors]
    if any(len(v) != n for v in vecs) or len(set(vecs)) != len(vecs):
        return False
    if sum(weight(v) for v in vecs) > w.level * (n - k):
        return False
    H = parity_check(code)
    syn = {H.apply(v) for v in vecs}
    return len(syn) == 1


def _syndrome_system(H: MatrixFp, supports: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Rows of H^{J_0} x_0 - H^{J_i} x_i = 0 for i >= 1, and column offsets."""
    p = H.field.modulus
    offs = [0]
    for J in supports:
        offs.append(offs[-1] + len(J))
    rows = []
    for i in range(1, len(supports)):
        for r in range(H.nrows):
            row = [0] * offs[-1]
            hr = H.rows[r]
            for pos, e in enumerate(supports[0]):
                row[offs[0] + pos] = hr[e]
            for pos, e in enumerate(supports[i]):
                row[offs[i] + pos] = (-hr[e]) % p
            rows.append(row)
    return rows, offs


def _expand(x: Sequence[int], supports, offs, n: int) -> list[tuple[int, ...]]:
    out = []
    for i, J in enumerate(supports):
        u = [0] * n
        for pos, e in enumerate(J):
            u[e] = x[offs[i] + pos]
        out.append(tuple(u))
    return out


def _distinct_kernel_vector(basis: list[tuple[int, ...]], supports, offs, n: int, p: int,
                            kernel_budget: int) -> list[tuple[int, ...]] | None:
    """A kernel combination whose expanded vectors are pairwise distinct, or None."""
    dim = len(basis)
    if dim == 0:
        return None
    m = len(supports)
    pairs = list(itertools.combinations(range(m), 2))
    exp = [_expand(b, supports, offs, n) for b in basis]

    def differs(coeffs_vec, a, b) -> bool:
        return coeffs_vec[a] != coeffs_vec[b]

    # per pair, a basis vector outside the subspace where u_a = u_b
    sep = []
    for a, b in pairs:
        j = next((j for j in range(dim) if differs(exp[j], a, b)), None)
        if j is None:
            return None  # the whole kernel has u_a = u_b
        sep.append(j)

    def combo(coeffs) -> list[tuple[int, ...]]:
        us = [[0] * n for _ in range(m)]
        for c, e in zip(coeffs, exp):
            if c:
                for i in range(m):
                    ui, ei = us[i], e[i]
                    for t in range(n):
                        if ei[t]:
                            ui[t] = (ui[t] + c * ei[t]) % p
        return [tuple(u) for u in us]

    coeffs = [0] * dim
    coeffs[sep[0]] = 1
    for idx in range(1, len(pairs)):
        us = combo(coeffs)
        a, b = pairs[idx]
        if us[a] != us[b]:
            continue
        for c in range(1, p):
            trial = list(coeffs)
            trial[sep[idx]] = (trial[sep[idx]] + c) % p
            us = combo(trial)
            if all(us[x] != us[y] for x, y in pairs[:idx + 1]):
                coeffs = trial
                break
        else:
            break
    us = combo(coeffs)
    if len(set(us)) == m:
        return us
    # small fields: the kernel may be a union of the bad subspaces
    if p ** dim > kernel_budget:
        raise BudgetExceeded(f"kernel enumeration q^dim = {p}^{dim} exceeds {kernel_budget}")
    for coeffs in itertools.product(range(p), repeat=dim):
        us = combo(coeffs)
        if len(set(us)) == m:
            return us
    return None


def _support_multisets(n: int, count: int, total: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    subsets = sorted((tuple(c) for r in range(n + 1) for c in itertools.combinations(range(n), r)),
                     key=lambda s: (len(s), s))

    def rec(start: int, chosen: list, left: int):
        slots = count - len(chosen)
        if slots == 0:
            if left == 0:
                yield tuple(chosen)
            return
        if left < 0 or left > slots * n:
            return
        for idx in range(start, len(subsets)):
            s = subsets[idx]
            if len(s) * slots > left:
                break
            chosen.append(s)
            yield from rec(idx, chosen, left - len(s))
            chosen.pop()

    yield from rec(0, [], total)


def ldmds_witness_direct(code: LinearCode, level: int, kernel_budget: int = DEFAULT_KERNEL_BUDGET) -> LdMdsWitness | None:
    """Search one level exactly through supports and syndrome kernels.

    Supports may be enlarged without losing witnesses, so only tuples whose
    sizes add up to exactly min(level (n-k), (level+1) n) are visited.
    """
    n, k = code.n, code.k
    H = parity_check(code)
    p = code.field.modulus
    r = n - k
    total = min(level * r, (level + 1) * n)
    for supports in _support_multisets(n, level + 1, total):
        rows, offs = _syndrome_system(H, supports)
        if rows:
            basis = _kernel_vectors(rows, offs[-1], p)
        else:
            basis = [tuple(int(i == j) for j in range(offs[-1])) for i in range(offs[-1])]
        us = _distinct_kernel_vector(basis, supports, offs, n, p, kernel_budget)
        if us is not None:
            w = LdMdsWitness(level, tuple(us), H.apply(us[0]))
            if not check_ldmds_witness(code, w):
                raise AssertionError("direct search produced an invalid witness")
            return w
    return None


def is_ld_mds_le(code: LinearCode, L: int, strategy: str = "dual",
                 kernel_budget: int = DEFAULT_KERNEL_BUDGET) -> bool | LdMdsWitness:
    """LD-MDS at every level 1..L (levels are tested separately; the property is not monotone)."""
    if L < 1:
        raise ValueError("L must be at least 1")
    if strategy == "dual":
        from .witness import ldmds_witness_from_family

        dual = dual_code(code)
        res = is_mds_ell(dual, L + 1)
        if res is True:
            return True
        return ldmds_witness_from_family(code, dual.generator, res)
    if strategy == "direct":
        for level in range(1, L + 1):
            w = ldmds_witness_direct(code, level, kernel_budget)
            if w is not None:
                return w
        return True
    raise ValueError(f"unknown strategy {strategy!r}")


# ---------------------------------------------------------------------------
# brute force average-radius list decoding


def codewords(code: LinearCode) -> list[tuple[int, ...]]:
    q = code.field.modulus
    G = code.generator
    out = []
    for msg in itertools.product(range(q), repeat=code.k):
        out.append(tuple(sum(m * g for m, g in zip(msg, col)) % q for col in zip(*G.rows)) if code.k
                   else (0,) * code.n)
    return out


def plurality_center(words: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], int]:
    """Coordinatewise most common symbol (ties to the smallest) and the total distance to it."""
    n = len(words[0])
    y, cost = [], 0
    for t in range(n):
        counts: dict[int, int] = {}
        for w in words:
            counts[w[t]] = counts.get(w[t], 0) + 1
        best = min(counts, key=lambda s: (-counts[s], s))
        y.append(best)
        cost += len(words) - counts[best]
    return tuple(y), cost


def brute_force_average_radius(code: LinearCode, L: int, budget: int,
                               tuple_budget: int = 10**7) -> bool | tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """True iff no L+1 distinct codewords have total distance <= L (n-k) to a common center.

    The objective is invariant under translating codewords and center by a
    codeword, so every tuple is moved to contain the zero word.
    """
    q, k, n = code.field.modulus, code.k, code.n
    if q ** k > budget:
        raise BudgetExceeded(f"q^k = {q ** k} exceeds budget {budget}")
    words = codewords(code)
    nonzero = [w for w in words if any(w)]
    if comb(len(nonzero), L) > tuple_budget:
        raise BudgetExceeded(f"{comb(len(nonzero), L)} tuples exceed {tuple_budget}")
    limit = L * (n - k)
    zero = (0,) * n
    for rest in itertools.combinations(nonzero, L):
        tup = (zero,) + rest
        y, cost = plurality_center(tup)
        if cost <= limit:
            return tup, y
    return True


def radius_from_params(R: Fraction | int, L: int) -> Fraction:
    R = Fraction(R)
    if not 0 < R < 1:
        raise ValueError("rate must lie strictly between 0 and 1")
    if L < 1:
        raise ValueError("list size must be at least 1")
    return 1 - R - (1 - R) / (L + 1)


def decoding_params(R: Fraction | int, L: int) -> DecodingParams:
    return DecodingParams(Fraction(R), L, radius_from_params(R, L))


# ---------------------------------------------------------------------------
# random Reed-Solomon experiments


def c_constant(n: int, k: int, L: int) -> int:
    """2 L n^2 * (number of subsets of [n] of size <= n-k)^(L+1)."""
    return 2 * L * n * n * sum(comb(n, i) for i in range(n - k + 1)) ** (L + 1)


@dataclass(frozen=True)
class RsTrialOutcome:
    points: tuple[int, ...]
    ok: bool
    reason: str


def rs_trial_from_points(F: PrimeField, points: Sequence[int], k: int, L: int) -> RsTrialOutcome:
    pts = tuple(F(x) for x in points)
    if len(set(pts)) != len(pts):
        return RsTrialOutcome(pts, False, "repeated evaluation points (not MDS)")
    res = is_ld_mds_le(vandermonde(F, pts, k), L, "dual")
    return RsTrialOutcome(pts, res is True, "ok" if res is True else "LD-MDS violation")


@dataclass(frozen=True)
class RsTrialReport:
    n: int
    k: int
    L: int
    prime: int
    seed: int
    trials: int
    failures: int
    c: int
    error_bound: Fraction
    rng: str = RNG_ALGORITHM
    outcomes: tuple[RsTrialOutcome, ...] = field(default=(), compare=False)

    @property
    def failure_rate(self) -> Fraction:
        return Fraction(self.failures, self.trials) if self.trials else Fraction(0)


def _rs_trial(args: tuple[int, int, int, int, int, int]) -> RsTrialOutcome:
    p, n, k, L, seed, t = args
    F = PrimeField(p)
    return rs_trial_from_points(F, random_elements(F, n, make_rng(seed, t)), k, L)


def random_rs_trial(n: int, k: int, L: int, field: PrimeField, trials: int, seed: int,
                    workers: int = 1) -> RsTrialReport:
    """Trial t draws its points from the stream (seed, t), so results do not depend on ``workers``."""
    if field.modulus < max(n, 1 << 31):
        raise ValueError("random RS trials need a modulus of at least max(n, 2^31)")
    jobs = [(field.modulus, n, k, L, seed, t) for t in range(trials)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as ex:
            outcomes = list(ex.map(_rs_trial, jobs))
    else:
        outcomes = [_rs_trial(j) for j in jobs]
    c = c_constant(n, k, L)
    return RsTrialReport(n, k, L, field.modulus, seed, trials, sum(not o.ok for o in outcomes),
                         c, Fraction(c, field.modulus), RNG_ALGORITHM, tuple(outcomes))


# ---------------------------------------------------------------------------
# planted negative instances


def planted_concurrent_lines(F: PrimeField, n: int, seed: int, max_tries: int = 1000) -> LinearCode:
    """MDS (n,3)-code, n >= 6, with three disjoint column pairs whose spans share a vector.

    The pairs occupy random positions; their spans all contain the same
    random vector z, so the code is MDS but not MDS(3).
    """
    if n < 6:
        raise ValueError("need n >= 6 for three disjoint pairs")
    rng = make_rng(seed)
    p = F.modulus
    for _ in range(max_tries):
        z = random_elements(F, 3, rng)
        cols: list[list[int]] = []
        for _pair in range(3):
            v = random_elements(F, 3, rng)
            a, b = random_elements(F, 2, rng)
            cols.append(v)
            cols.append([(a * zi + b * vi) % p for zi, vi in zip(z, v)])
        cols.extend(random_elements(F, 3, rng) for _ in range(n - 6))
        perm = [int(x) for x in rng.permutation(n)]
        cols = [cols[i] for i in perm]
        G = MatrixFp(F, tuple(zip(*cols)), n)
        if rank(G) < 3:
            continue
        code = LinearCode(G)
        if is_mds(code):
            return code
    raise RuntimeError("could not plant an MDS instance; field too small?")


def planted_non_mds(F: PrimeField, n: int, k: int, seed: int, max_tries: int = 1000) -> LinearCode:
    """Random full-rank code with one column repeated (so not MDS when k >= 2)."""
    rng = make_rng(seed)
    for _ in range(max_tries):
        cols = [random_elements(F, k, rng) for _ in range(n - 1)]
        cols.append(list(cols[0]))
        perm = [int(x) for x in rng.permutation(n)]
        cols = [cols[i] for i in perm]
        G = MatrixFp(F, tuple(zip(*cols)), n)
        if rank(G) == k:
            return LinearCode(G)
    raise RuntimeError("could not sample a full-rank generator")


def random_code(F: PrimeField, n: int, k: int, seed: int, max_tries: int = 1000) -> LinearCode:
    rng = make_rng(seed)
    for _ in range(max_tries):
        G = MatrixFp(F, tuple(tuple(random_elements(F, n, rng)) for _ in range(k)), n)
        if rank(G) == k:
            return LinearCode(G)
    raise RuntimeError("could not sample a full-rank generator")
