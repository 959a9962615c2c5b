import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from higher_mds.linalg import (
    GF,
    MERSENNE_61,
    MatrixFp,
    Subspace,
    column_span,
    determinant,
    inverse,
    is_prime,
    kernel_basis,
    make_rng,
    random_elements,
    random_matrix,
    rank,
    rational_rank,
    rref,
    solve,
    subspace_intersection,
)

F7 = GF(7)


def trial_division(m):
    return m >= 2 and all(m % d for d in range(2, int(m ** 0.5) + 1))


def det_by_permutations(rows, p):
    k = len(rows)
    total = 0
    for perm in itertools.permutations(range(k)):
        sign = 1
        for i in range(k):
            for j in range(i + 1, k):
                if perm[i] > perm[j]:
                    sign = -sign
        term = sign
        for i in range(k):
            term *= rows[i][perm[i]]
        total += term
    return total % p


def rank_by_minors(m):
    """Largest r with a nonzero r x r minor."""
    p = m.field.p
    for r in range(min(m.shape), 0, -1):
        for rs in itertools.combinations(range(m.nrows), r):
            for cs in itertools.combinations(range(m.ncols), r):
                if det_by_permutations([[m[i, j] for j in cs] for i in rs], p):
                    return r
    return 0


def test_primality_matches_trial_division():
    assert all(is_prime(m) == trial_division(m) for m in range(3000))
    assert is_prime(MERSENNE_61) and is_prime(2 ** 31 - 1)
    assert not is_prime(561) and not is_prime(3215031751) and not is_prime(2 ** 61 + 1)


def test_field_rejects_composites_and_large_moduli():
    with pytest.raises(ValueError):
        GF(15)
    with pytest.raises(ValueError):
        GF(2 ** 62 + 135)


def test_rank_examples():
    assert rank(MatrixFp.identity(F7, 3)) == 3
    assert rank(MatrixFp.zeros(F7, 2, 5)) == 0
    assert rank(MatrixFp.from_rows(F7, [[1, 2], [2, 4]])) == 1


def test_rank_agrees_with_minor_enumeration():
    rng = make_rng(11)
    for trial in range(60):
        r, c = (int(x) for x in rng.integers(1, 5, size=2))
        F = GF([2, 3, 5, 7][trial % 4])
        m = random_matrix(F, r, c, rng)
        assert rank(m) == rank_by_minors(m)


def test_kernel_examples():
    ker = kernel_basis(MatrixFp.from_rows(F7, [[1, 1]]))
    assert ker == Subspace.span(F7, 2, [(1, 6)])
    brute = [v for v in itertools.product(range(7), repeat=2) if (v[0] + v[1]) % 7 == 0]
    assert len(brute) == 7 ** ker.dim and all(ker.contains(v) for v in brute)
    assert kernel_basis(MatrixFp.identity(F7, 3)).dim == 0
    assert kernel_basis(MatrixFp.zeros(F7, 1, 3)) == Subspace.full(F7, 3)


def test_intersection_examples():
    e1, e2, e3 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    a = Subspace.span(F7, 3, [e1, e2])
    b = Subspace.span(F7, 3, [e2, e3])
    assert subspace_intersection([a, b]) == Subspace.span(F7, 3, [e2])
    assert subspace_intersection([a, a]) == a
    F = GF(10007)
    w = random_matrix(F, 3, 6, 5)
    planes = [column_span(w, [0, 1]), column_span(w, [2, 3]), column_span(w, [4, 5])]
    assert all(pl.dim == 2 for pl in planes)
    assert subspace_intersection(planes).dim == 0


def test_intersection_rejects_mixed_ambients():
    with pytest.raises(ValueError):
        subspace_intersection([Subspace.full(F7, 2), Subspace.full(F7, 3)])


def test_random_matrix_determinism_and_range():
    assert random_matrix(F7, 2, 2, 1) == random_matrix(F7, 2, 2, 1)
    assert random_matrix(F7, 4, 4, 1) != random_matrix(F7, 4, 4, 2)
    for seed in range(20):
        assert random_matrix(GF(2), 1, 1, seed)[0, 0] in (0, 1)


def test_random_entries_uniform():
    """Chi-square over 10^6 draws stays within 4 sigma of its mean (df = 6)."""
    draws = np.asarray(random_elements(F7, 10 ** 6, make_rng(2024)))
    counts = np.bincount(draws, minlength=7)
    expected = 10 ** 6 / 7
    chi2 = float(((counts - expected) ** 2 / expected).sum())
    assert abs(chi2 - 6) <= 4 * (12 ** 0.5)


def test_text_round_trip():
    m = random_matrix(GF(MERSENNE_61), 3, 4, 9)
    assert MatrixFp.from_text(m.to_text()) == m
    assert MatrixFp.from_text("7 2 2\n1 2\n3 4\n").to_lists() == [[1, 2], [3, 4]]
    with pytest.raises(ValueError):
        MatrixFp.from_text("7 2 2\n1 2\n")


def test_solve_inverse_determinant():
    m = MatrixFp.from_rows(F7, [[2, 1], [1, 1]])
    assert determinant(m) == det_by_permutations(m.to_lists(), 7) == 1
    assert inverse(m) @ m == MatrixFp.identity(F7, 2)
    x = solve(m, [3, 4])
    assert m.apply(x) == (3, 4)
    assert solve(MatrixFp.from_rows(F7, [[1, 1], [2, 2]]), [1, 3]) is None
    with pytest.raises(ZeroDivisionError):
        inverse(MatrixFp.from_rows(F7, [[1, 2], [2, 4]]))


def test_determinant_matches_permutation_expansion():
    rng = make_rng(3)
    for _ in range(30):
        m = random_matrix(GF(13), 4, 4, rng)
        assert determinant(m) == det_by_permutations(m.to_lists(), 13)


def test_rref_shape():
    m = MatrixFp.from_rows(F7, [[0, 2, 4], [1, 1, 1]])
    r, piv = rref(m)
    assert piv == [0, 1] and r.to_lists() == [[1, 0, 6], [0, 1, 2]]


small_primes = st.sampled_from([2, 3, 5, 7, 11, 13, 10007])


@settings(max_examples=1000)
@given(p=small_primes, r=st.integers(0, 12), c=st.integers(0, 12), seed=st.integers(0, 2 ** 32))
def test_rank_of_transpose(p, r, c, seed):
    F = GF(p)
    if r == 0 or c == 0:
        m = MatrixFp(F, tuple((0,) * c for _ in range(r)), c)
    else:
        m = random_matrix(F, r, c, seed)
    assert rank(m) == rank(m.T) <= min(r, c)
    assert kernel_basis(m).dim + rank(m) == c


@settings(max_examples=200)
@given(p=small_primes, seed=st.integers(0, 2 ** 32), k=st.integers(1, 5), count=st.integers(1, 4))
def test_intersection_membership(p, seed, k, count):
    F = GF(p)
    rng = make_rng(seed)
    spaces = []
    for _ in range(count):
        d = int(rng.integers(0, k + 1))
        spaces.append(Subspace.span(F, k, [random_elements(F, k, rng) for _ in range(d)]))
    inter = subspace_intersection(spaces)
    for v in inter.basis:
        assert all(s.contains(v) for s in spaces)
    # every vector lying in all inputs lies in the result
    if p ** k <= 2000:
        for v in itertools.product(range(p), repeat=k):
            if all(s.contains(v) for s in spaces):
                assert inter.contains(v)
    # independence from the choice of bases
    reshuffled = []
    for s in spaces:
        if s.dim:
            t = random_matrix(F, s.dim, s.dim, rng)
            while rank(t) < s.dim:
                t = random_matrix(F, s.dim, s.dim, rng)
            reshuffled.append(Subspace.span(F, k, (t @ s.as_matrix()).rows))
        else:
            reshuffled.append(s)
    assert subspace_intersection(reshuffled) == inter


@settings(max_examples=200)
@given(rows=st.integers(1, 6), cols=st.integers(1, 6), data=st.data())
def test_rational_rank_matches_mersenne_rank(rows, cols, data):
    ent = st.integers(-9, 9)
    a = [[data.draw(ent) for _ in range(cols)] for _ in range(rows)]
    # all minors are below 6! * 9^6 < 2^61 - 1, so no pivot minor vanishes mod p by accident
    assert rational_rank(a) == rank(MatrixFp.from_rows(GF(MERSENNE_61), a))
    assert rational_rank([[Fraction(1, 2), Fraction(1, 3)], [3, 2]]) == 1
