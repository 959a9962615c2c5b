import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from higher_mds.errors import CapacityError
from higher_mds.intersect import (
    blow_up_rank,
    build_linear_matrix,
    check_dual_certificate,
    generic_dim_lp,
    generic_dim_partition,
    generic_dim_randomized,
    is_null_intersecting,
    separation_oracle,
    submodular_f,
)
from higher_mds.linalg import (
    GF,
    MERSENNE_61,
    column_span,
    kernel_basis,
    random_matrix,
    rank,
    subspace_intersection,
)
from higher_mds.patterns import IndexPartition, SetFamily

from strategies import families

BIG = GF(MERSENNE_61)
OTHER = GF(2147483659)  # smallest prime above 2^31
EXAMPLE = SetFamily.of(3, 2, [{1, 2}, {1, 2}, {3}])
PAIRS = SetFamily.of(6, 3, [{1, 2}, {3, 4}, {5, 6}])


def geometric_dim(fam, seed, F=BIG):
    """dim of the intersection of column spans of one random W, via annihilators."""
    w = random_matrix(F, fam.k, fam.n, seed)
    return subspace_intersection([column_span(w, [e - 1 for e in sorted(a)]) for a in fam.sets]).dim


def test_partition_examples():
    r = generic_dim_partition(EXAMPLE)
    assert r.dimension == 1 and r.partition == IndexPartition(((0, 1), (2,)))
    assert generic_dim_partition(SetFamily.of(2, 2, [{1}, {1}, {2}])).dimension == 0
    assert generic_dim_partition(SetFamily.of(5, 3, [{1, 4, 5}])).dimension == 3
    assert generic_dim_partition(PAIRS).dimension == 0
    assert geometric_dim(SetFamily.of(2, 2, [{1}, {1}, {2}]), 1) == 0
    with pytest.raises(CapacityError):
        generic_dim_partition(SetFamily.of(3, 2, [{1}] * 13))


def test_lp_examples():
    r, cert = generic_dim_lp(EXAMPLE)
    assert r.dimension == 1 and cert.objective == 1 and check_dual_certificate(EXAMPLE, cert)
    r, _ = generic_dim_lp(SetFamily.of(5, 4, [{2, 3}]))
    assert r.dimension == 2 and r.deltas == (2,)
    fam = SetFamily.of(5, 4, [{1}, {2, 3}])
    r, _ = generic_dim_lp(fam)
    assert r.dimension == 0 and sum(r.deltas) == 4


def test_lp_beyond_partition_cap_uses_simplex_duals():
    rnd = random.Random(5)
    fam = SetFamily.of(8, 4, [rnd.sample(range(1, 9), rnd.randint(1, 4)) for _ in range(14)])
    r, cert = generic_dim_lp(fam)
    assert cert.source == "simplex" and check_dual_certificate(fam, cert)
    assert cert.objective == r.dimension
    assert r.dimension == geometric_dim(fam, 3)


def test_separation_examples():
    sep = separation_oracle(SetFamily.of(2, 2, [{1, 2}]), [1])
    assert not sep.feasible and sep.subset == (0,) and sep.value == -1
    assert separation_oracle(EXAMPLE, [0, 0, 0]).feasible
    with pytest.raises(CapacityError):
        separation_oracle(SetFamily.of(2, 2, [{1}] * 21), [0] * 21)


@settings(max_examples=200)
@given(families(max_n=6, max_k=4, max_ell=4), st.data())
def test_separation_function_is_submodular(fam, data):
    deltas = [Fraction(data.draw(st.integers(0, 6)), data.draw(st.integers(1, 3))) for _ in fam.sets]
    subsets = [I for r in range(fam.ell + 1) for I in itertools.combinations(range(fam.ell), r)]
    for I, J in itertools.product(subsets, repeat=2):
        union = tuple(sorted(set(I) | set(J)))
        inter = tuple(sorted(set(I) & set(J)))
        assert (submodular_f(fam, deltas, I) + submodular_f(fam, deltas, J)
                >= submodular_f(fam, deltas, union) + submodular_f(fam, deltas, inter))
    sep = separation_oracle(fam, deltas)
    assert sep.value == min(submodular_f(fam, deltas, I) for I in subsets if I)


def test_randomized_examples():
    r = generic_dim_randomized(EXAMPLE, BIG, 2, 0)
    assert r.dimension == 1 and r.details["agreeing_trials"] == 2
    assert r.error_bound == Fraction(2 * 9, MERSENNE_61) ** 2
    assert generic_dim_randomized(SetFamily.of(4, 3, [{1, 4}]), BIG, 1, 0).dimension == 2
    assert generic_dim_randomized(PAIRS, BIG, 2, 7).dimension == 0
    with pytest.raises(ValueError):
        generic_dim_randomized(EXAMPLE, GF(10007), 1, 0)


def test_linear_matrix_shapes():
    w = random_matrix(BIG, 2, 3, 1)
    two = build_linear_matrix(SetFamily.of(3, 2, [{1, 2}, {3}]), w)
    assert two.matrix.to_lists() == w.columns([0, 1, 2]).to_lists()
    three = build_linear_matrix(EXAMPLE, w)
    assert three.matrix.shape == (4, 5)
    assert three.col_blocks == ((0, 1), (2, 3), (4,))
    rows = three.matrix.to_lists()
    # first block column repeats, the others sit on the diagonal
    assert [r[:2] for r in rows[:2]] == [r[:2] for r in rows[2:]]
    assert all(x == 0 for r in rows[:2] for x in r[4:]) and all(x == 0 for r in rows[2:] for x in r[2:4])
    with pytest.raises(ValueError):
        build_linear_matrix(EXAMPLE, random_matrix(BIG, 3, 3, 1))


@settings(max_examples=150)
@given(families(max_n=7, max_k=4, max_ell=4), st.integers(0, 2 ** 32))
def test_kernel_dimension_equals_intersection_dimension(fam, seed):
    F = GF(10007)
    w = random_matrix(F, fam.k, fam.n, seed)
    spans = [column_span(w, [e - 1 for e in sorted(a)]) for a in fam.sets]
    if any(s.dim != len(a) for s, a in zip(spans, fam.sets)) or fam.ell == 1:
        return
    ker = kernel_basis(build_linear_matrix(fam, w).matrix)
    assert ker.dim == subspace_intersection(spans).dim


def test_blow_up_examples():
    r1 = blow_up_rank(EXAMPLE, 1, BIG, 3)
    w = random_matrix(BIG, 2, 3, 8)
    assert r1 == rank(build_linear_matrix(EXAMPLE, w).matrix) == 5 - 1
    assert blow_up_rank(EXAMPLE, 2, BIG, 3) == 2 * r1
    with pytest.raises(ValueError):
        blow_up_rank(EXAMPLE, 4, BIG, 3)


def test_null_intersection_examples():
    assert is_null_intersecting(PAIRS)
    assert not is_null_intersecting(SetFamily.of(4, 2, [{1}, {1}]))
    assert is_null_intersecting(SetFamily.of(2, 2, [{1}, {1}, {2}]))


# ---------------------------------------------------------------------------
# engine agreement and structural properties


@settings(max_examples=300)
@given(families(), st.integers(0, 2 ** 32))
def test_engines_agree(fam, seed):
    d = generic_dim_partition(fam).dimension
    lp, cert = generic_dim_lp(fam)
    assert lp.dimension == d == cert.objective
    assert generic_dim_randomized(fam, BIG, 2, seed).dimension == d
    assert generic_dim_randomized(fam, OTHER, 2, seed).dimension == d
    assert geometric_dim(fam, seed) == d


@settings(max_examples=200)
@given(families(), st.data())
def test_monotone_and_invariant(fam, data):
    d = generic_dim_partition(fam).dimension
    total = sum(len(s) for s in fam.sets)
    assert max(0, total - (fam.ell - 1) * fam.k) <= d <= min(len(s) for s in fam.sets)
    perm = data.draw(st.permutations(range(fam.ell)))
    relabel = data.draw(st.permutations(range(1, fam.n + 1)))
    shuffled = SetFamily.of(fam.n, fam.k, [{relabel[e - 1] for e in fam.sets[i]} for i in perm])
    assert generic_dim_partition(shuffled).dimension == d
    i = data.draw(st.integers(0, fam.ell - 1))
    grow = [x for x in range(1, fam.n + 1) if x not in fam.sets[i]]
    if grow and len(fam.sets[i]) < fam.k:
        sets = list(fam.sets)
        sets[i] = sets[i] | {grow[0]}
        assert generic_dim_partition(fam.with_sets(sets)).dimension >= d


@settings(max_examples=40)
@given(families(max_n=6, max_k=3, max_ell=3), st.integers(0, 2 ** 32))
def test_blow_up_scaling(fam, seed):
    r1 = blow_up_rank(fam, 1, BIG, seed)
    for t in (2, 3):
        rt = blow_up_rank(fam, t, BIG, seed)
        assert rt % t == 0 and rt == t * r1
