"""Zero patterns, set families and the Hall-type theorems relating them.

Elements of the ground set are 1-based labels ``1..n`` throughout. Indices
of sets inside a family (and blocks of index partitions) are 0-based Python
positions; the JSON layer converts them to 1-based.

Tie-breaking is lexicographic everywhere: padding adds the smallest
admissible element to the smallest admissible set, partitions are visited
in restricted-growth-string order, and Hall matchings try candidates in
increasing order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapacityError, PreconditionError

PARTITION_CAP = 12


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


def _check_elements(sets: Sequence[frozenset[int]], n: int) -> None:
    for s in sets:
        for e in s:
            if not (isinstance(e, int) and 1 <= e <= n):
                raise ValueError(f"element {e!r} outside [1, {n}]")


@dataclass(frozen=True)
class SetFamily:
    """Sets A_1..A_l of [n], each of size at most k, with optional multiplicities."""

    n: int
    k: int
    sets: tuple[frozenset[int], ...]
    deltas: tuple[int, ...] | None = None

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if not sets:
            raise ValueError("a set family needs at least one set")
        if self.k < 0 or self.n < 0:
            raise ValueError("n and k must be non-negative")
        _check_elements(sets, self.n)
        for s in sets:
            if len(s) > self.k:
                raise ValueError(f"set {sorted(s)} has more than k={self.k} elements")
        if self.deltas is not None:
            deltas = tuple(int(x) for x in self.deltas)
            if len(deltas) != len(sets) or any(x < 0 for x in deltas):
                raise ValueError("need one non-negative multiplicity per set")
            object.__setattr__(self, "deltas", deltas)

    @classmethod
    def of(cls, n: int, k: int, sets: Iterable[Iterable[int]], deltas: Iterable[int] | None = None) -> "SetFamily":
        return cls(n, k, tuple(frozenset(s) for s in sets), None if deltas is None else tuple(deltas))

    @property
    def ell(self) -> int:
        return len(self.sets)

    @property
    def masks(self) -> list[int]:
        return [to_mask(s) for s in self.sets]

    def with_deltas(self, deltas: Iterable[int]) -> "SetFamily":
        return SetFamily(self.n, self.k, self.sets, tuple(deltas))

    def with_sets(self, sets: Iterable[Iterable[int]]) -> "SetFamily":
        return SetFamily(self.n, self.k, tuple(frozenset(s) for s in sets), self.deltas)

    def intersection(self, indices: Iterable[int]) -> frozenset[int]:
        out = None
        for i in indices:
            out = self.sets[i] if out is None else out & self.sets[i]
        if out is None:
            return frozenset(range(1, self.n + 1))
        return out


@dataclass(frozen=True)
class ZeroPattern:
    """Row i of a k x n matrix is required to vanish on sets[i]."""

    n: int
    k: int
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        sets = tuple(frozenset(s) for s in self.sets)
        object.__setattr__(self, "sets", sets)
        if len(sets) != self.k:
            raise ValueError(f"a zero pattern for k={self.k} needs exactly k sets, got {len(sets)}")
        _check_elements(sets, self.n)

    @classmethod
    def of(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "ZeroPattern":
        return cls(n, k, tuple(frozenset(s) for s in sets))

    @property
    def order(self) -> int:
        return len({s for s in self.sets if s})

    def groups(self) -> tuple[list[frozenset[int]], list[list[int]]]:
        """Distinct nonempty sets in first-appearance order, with their row indices."""
        distinct: list[frozenset[int]] = []
        rows: list[list[int]] = []
        where: dict[frozenset[int], int] = {}
        for j, s in enumerate(self.sets):
            if not s:
                continue
            if s not in where:
                where[s] = len(distinct)
                distinct.append(s)
                rows.append([])
            rows[where[s]].append(j)
        return distinct, rows

    def contains(self, other: "ZeroPattern") -> bool:
        """True when every row of ``self`` is a superset of the same row of ``other``."""
        return self.k == other.k and all(a >= b for a, b in zip(self.sets, other.sets))

    @property
    def empty_rows(self) -> int:
        return sum(1 for s in self.sets if not s)


@dataclass(frozen=True)
class IndexPartition:
    """Disjoint nonempty blocks of 0-based indices covering range(ell)."""

    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(sorted(b)) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        flat = [i for b in blocks for i in b]
        if any(not b for b in blocks) or sorted(flat) != list(range(len(flat))):
            raise ValueError(f"not a partition of range(l): {blocks}")

    @property
    def size(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def one_based(self) -> list[list[int]]:
        return [[i + 1 for i in b] for b in self.blocks]


# ---------------------------------------------------------------------------
# partitions and subset enumeration


def set_partitions(ell: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All partitions of range(ell) in restricted-growth-string order."""
    if ell == 0:
        yield ()
        return
    blocks: list[list[int]] = []

    def rec(i: int):
        if i == ell:
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1)
        blocks.pop()

    yield from rec(0)


def _partition_values(masks: Sequence[int], k: int) -> Iterator[tuple[int, tuple[tuple[int, ...], ...]]]:
    """(sum_i |A_{P_i}| - (s-1)k, partition) for every partition, RGS order."""
    ell = len(masks)
    bmask: list[int] = []
    bidx: list[list[int]] = []

    def rec(i: int):
        if i == ell:
            s = len(bmask)
            val = sum(m.bit_count() for m in bmask) - (s - 1) * k
            yield val, tuple(tuple(b) for b in bidx)
            return
        mi = masks[i]
        for j in range(len(bmask)):
            old = bmask[j]
            bmask[j] = old & mi
            bidx[j].append(i)
            yield from rec(i + 1)
            bidx[j].pop()
            bmask[j] = old
        bmask.append(mi)
        bidx.append([i])
        yield from rec(i + 1)
        bidx.pop()
        bmask.pop()

    yield from rec(0)


def max_partition_value(masks: Sequence[int], k: int) -> tuple[int, IndexPartition]:
    """Maximum over partitions of sum |A_{P_i}| - (s-1)k; first maximiser in RGS order."""
    if len(masks) > PARTITION_CAP:
        raise CapacityError(f"partition enumeration capped at l={PARTITION_CAP}; use the LP engine")
    best, arg = None, None
    for val, blocks in _partition_values(masks, k):
        if best is None or val > best:
            best, arg = val, blocks
    return best, IndexPartition(arg)


def subset_intersections(masks: Sequence[int], universe: int) -> list[int]:
    """inter[I] = intersection of masks[i] for i in I, indexed by bitmask I (inter[0] = universe)."""
    ell = len(masks)
    inter = [universe] * (1 << ell)
    for I in range(1, 1 << ell):
        low = (I & -I).bit_length() - 1
        inter[I] = inter[I & (I - 1)] & masks[low]
    return inter


def bits(I: int) -> tuple[int, ...]:
    out = []
    i = 0
    while I:
        if I & 1:
            out.append(i)
        I >>= 1
        i += 1
    return tuple(out)


def ell_hall_violation(masks: Sequence[int], k: int, deltas: Sequence[int]) -> tuple[int, ...] | None:
    """First nonempty I with |A_I| > k - sum_{i in I} delta_i, or None."""
    ell = len(masks)
    if ell > 24:
        raise CapacityError("subset enumeration capped at l=24")
    universe = 0
    for m in masks:
        universe |= m
    inter = subset_intersections(masks, universe)
    dsum = [0] * (1 << ell)
    for I in range(1, 1 << ell):
        low = (I & -I).bit_length() - 1
        dsum[I] = dsum[I & (I - 1)] + deltas[low]
        if inter[I].bit_count() > k - dsum[I]:
            return bits(I)
    return None


# ---------------------------------------------------------------------------
# generic zero patterns


def is_gzp(pattern: ZeroPattern) -> bool:
    """Check |S_I| <= k - |I| for all I, over distinct sets taken with full multiplicity."""
    distinct, rows = pattern.groups()
    if not distinct:
        return True
    counts = [len(r) for r in rows]
    return ell_hall_violation([to_mask(s) for s in distinct], pattern.k, counts) is None


def gzp_violation(pattern: ZeroPattern) -> tuple[int, ...] | None:
    """Row indices I violating the generic-zero-pattern inequality, or None."""
    distinct, rows = pattern.groups()
    if not distinct:
        return None
    bad = ell_hall_violation([to_mask(s) for s in distinct], pattern.k, [len(r) for r in rows])
    if bad is None:
        return None
    return tuple(sorted(j for g in bad for j in rows[g]))


def pattern_from_multiplicities(family: SetFamily) -> ZeroPattern:
    """delta_i copies of A_i (in order) followed by k - sum(delta) empty rows."""
    if family.deltas is None:
        raise ValueError("family carries no multiplicities")
    total = sum(family.deltas)
    if total > family.k:
        raise PreconditionError(f"sum of multiplicities {total} exceeds k={family.k}")
    rows: list[frozenset[int]] = []
    for s, dlt in zip(family.sets, family.deltas):
        rows.extend([s] * dlt)
    rows.extend([frozenset()] * (family.k - total))
    return ZeroPattern(family.n, family.k, tuple(rows))


def multiplicities_of(pattern: ZeroPattern) -> SetFamily | None:
    """The distinct nonempty sets of a pattern with their multiplicities (None for order 0)."""
    distinct, rows = pattern.groups()
    if not distinct:
        return None
    return SetFamily(pattern.n, pattern.k, tuple(distinct), tuple(len(r) for r in rows))


def satisfies_ell_hall(family: SetFamily) -> bool:
    if family.deltas is None:
        raise ValueError("family carries no multiplicities")
    return ell_hall_violation(family.masks, family.k, family.deltas) is None


# ---------------------------------------------------------------------------
# Hall-type extensions


def hall_matching(candidates: Sequence[Sequence[int]]) -> list[int] | None:
    """Perfect matching of rows to distinct elements, or None.

    Kuhn's augmenting paths; rows are processed in order and candidates are
    tried in increasing order, so the result is deterministic.
    """
    owner: dict[int, int] = {}

    def augment(r: int, seen: set[int]) -> bool:
        for x in candidates[r]:
            if x in seen:
                continue
            seen.add(x)
            if x not in owner or augment(owner[x], seen):
                owner[x] = r
                return True
        return False

    for r in range(len(candidates)):
        if not augment(r, set()):
            return None
    match = [0] * len(candidates)
    for x, r in owner.items():
        match[r] = x
    return match


def extend_hall(family: SetFamily) -> SetFamily:
    """Grow each A_i to a superset of size k - delta_i keeping the multiplicity condition.

    Follows the constructive argument: sets are handled one at a time; a set
    with delta_i = 0 is padded with the smallest missing elements, otherwise
    a k-set T containing A_i is fixed, the complements of the pattern rows
    inside T are matched to distinct elements of T, and A_i is replaced by T
    minus the elements matched to its own rows.
    """
    if family.deltas is None:
        raise ValueError("family carries no multiplicities")
    n, k = family.n, family.k
    deltas = family.deltas
    if n < k:
        raise PreconditionError(f"need n >= k (n={n}, k={k})")
    bad = ell_hall_violation(family.masks, k, deltas)
    if bad is not None:
        raise PreconditionError(f"multiplicity condition fails for I={[i + 1 for i in bad]}", bad)

    sets = [set(s) for s in family.sets]
    for i, target in enumerate(k - d for d in deltas):
        if len(sets[i]) == target:
            continue
        if deltas[i] == 0:
            missing = [x for x in range(1, n + 1) if x not in sets[i]]
            sets[i].update(missing[:target - len(sets[i])])
            continue
        rows: list[set[int]] = []
        own: list[int] = []
        for j, s in enumerate(sets):
            for _ in range(deltas[j]):
                rows.append(s)
                if j == i:
                    own.append(len(rows) - 1)
        rows.extend(set() for _ in range(k - len(rows)))
        T = sorted(sets[i])
        T += [x for x in range(1, n + 1) if x not in sets[i]][:k - len(T)]
        Tset = set(T)
        match = hall_matching([sorted(Tset - r) for r in rows])
        if match is None:
            raise AssertionError("Hall condition failed on a valid instance")
        sets[i] = Tset - {match[j] for j in own}

    out = family.with_sets(sets)
    bad = ell_hall_violation(out.masks, k, deltas)
    if bad is not None or any(len(s) != k - d for s, d in zip(out.sets, deltas)):
        raise AssertionError("extension failed verification")
    return out


def extend_to_maximal(pattern: ZeroPattern) -> ZeroPattern:
    """Superset pattern where each distinct nonempty set A appears exactly k - |A| times."""
    bad = gzp_violation(pattern)
    if bad is not None:
        raise PreconditionError(f"not a generic zero pattern (rows {[j + 1 for j in bad]})", bad)
    distinct, rows = pattern.groups()
    if not distinct:
        return pattern
    fam = SetFamily(pattern.n, pattern.k, tuple(distinct), tuple(len(r) for r in rows))
    ext = extend_hall(fam)
    out = list(pattern.sets)
    for s, rr in zip(ext.sets, rows):
        for j in rr:
            out[j] = s
    return ZeroPattern(pattern.n, pattern.k, tuple(out))


def is_maximal(pattern: ZeroPattern) -> bool:
    distinct, rows = pattern.groups()
    return is_gzp(pattern) and all(len(s) == pattern.k - len(r) for s, r in zip(distinct, rows))


def gen_hall_k_minus_1(pattern: ZeroPattern) -> ZeroPattern:
    """Superset pattern with every row of size k-1, still generic."""
    bad = gzp_violation(pattern)
    if bad is not None:
        raise PreconditionError(f"not a generic zero pattern (rows {[j + 1 for j in bad]})", bad)
    if pattern.k == 0:
        return pattern
    fam = SetFamily(pattern.n, pattern.k, pattern.sets, (1,) * pattern.k)
    return ZeroPattern(pattern.n, pattern.k, extend_hall(fam).sets)


# ---------------------------------------------------------------------------
# partition characterization


def check_partition_condition(family: SetFamily, d: int) -> bool | IndexPartition:
    """True iff sum_i |A_{P_i}| <= (s-1)k + d for every partition; else a worst partition."""
    val, part = max_partition_value(family.masks, family.k)
    return True if val <= d else part


def minimal_d(family: SetFamily) -> int:
    return max_partition_value(family.masks, family.k)[0]


def _first_tight(masks: Sequence[int], k: int, d: int) -> tuple[tuple[int, ...], ...] | None:
    for val, blocks in _partition_values(masks, k):
        if len(blocks) >= 2 and val == d:
            return blocks
    return None


def _deltas(masks: list[int], k: int, d: int, n: int) -> list[int]:
    ell = len(masks)
    if d == k:
        return [0] * ell
    if ell == 1:
        return [k - d]
    masks = list(masks)
    full = (1 << n) - 1
    val, _ = max_partition_value(masks, k)
    if val > d:
        raise PreconditionError("partition condition fails")
    # pad until some partition is tight
    while val < d:
        for i in range(ell):
            if masks[i].bit_count() < k and masks[i] != full:
                free = full & ~masks[i]
                masks[i] |= free & -free
                break
        else:
            raise AssertionError("no padding possible below the tight value")
        val, _ = max_partition_value(masks, k)
    tight = _first_tight(masks, k, d)
    # only the one-block partition is tight: pad without growing A_[l]
    while tight is None:
        for i in range(ell):
            if masks[i].bit_count() >= k:
                continue
            others = full
            for j in range(ell):
                if j != i:
                    others &= masks[j]
            free = full & ~masks[i] & ~others
            if free:
                masks[i] |= free & -free
                break
        else:
            raise AssertionError("padding stalled before a tight partition with s >= 2")
        tight = _first_tight(masks, k, d)
    out = [0] * ell
    for block in tight:
        ap = full
        for j in block:
            ap &= masks[j]
        sub = _deltas([masks[j] & ~ap for j in block], k - ap.bit_count(), 0, n)
        for j, dj in zip(block, sub):
            out[j] = dj
    return out


def deltas_from_d(family: SetFamily, d: int) -> tuple[int, ...]:
    """Multiplicities summing to k - d that satisfy the multiplicity condition.

    Constructive induction on the number of sets: pad until a partition with
    at least two blocks is tight, strip each block's common part and recurse
    into the blocks with reduced dimension. Padding is local to the
    recursion; only the multiplicities are returned, and they are checked
    against the original sets.
    """
    k = family.k
    if not 0 <= d <= k:
        raise PreconditionError(f"d={d} outside [0, k={k}]")
    if family.n < k:
        raise PreconditionError(f"need n >= k (n={family.n}, k={k})")
    ok = check_partition_condition(family, d)
    if ok is not True:
        raise PreconditionError(f"partition condition fails at {ok.one_based()}", ok)
    deltas = tuple(_deltas(family.masks, k, d, family.n))
    bad = ell_hall_violation(family.masks, k, deltas)
    if bad is not None or sum(deltas) != k - d:
        raise AssertionError("constructed multiplicities failed verification")
    return deltas
