import itertools
from fractions import Fraction

import pytest

from higher_mds.codes import (
    AttainFailure,
    GzpCertificate,
    LinearCode,
    MdsViolation,
    attain_pattern,
    brute_force_average_radius,
    c_constant,
    check_gzp_certificate,
    check_ldmds_witness,
    codewords,
    dual_code,
    grs_dual,
    is_gzp_ell,
    is_ld_mds_le,
    is_mds,
    is_mds_ell,
    maximal_patterns,
    planted_concurrent_lines,
    planted_non_mds,
    radius_from_params,
    random_code,
    random_rs_trial,
    rs_trial_from_points,
    vandermonde,
)
from higher_mds.errors import BudgetExceeded, PreconditionError
from higher_mds.intersect import generic_dim_partition
from higher_mds.linalg import (
    GF,
    MERSENNE_61,
    MatrixFp,
    column_span,
    make_rng,
    random_elements,
    rank,
    subspace_intersection,
)
from higher_mds.patterns import SetFamily, ZeroPattern, is_gzp

F7 = GF(7)
BIG = GF(MERSENNE_61)


def random_rs(F, n, k, seed):
    rng = make_rng(seed)
    while True:
        pts = random_elements(F, n, rng)
        if len(set(pts)) == n:
            return vandermonde(F, pts, k)


def mds_ell_by_definition(code, ell):
    """Actual vs generic dimension for every multiset of l column sets of size <= k."""
    G, n, k = code.generator, code.n, code.k
    subsets = [frozenset(c) for r in range(k + 1) for c in itertools.combinations(range(1, n + 1), r)]
    spans = {s: column_span(G, [e - 1 for e in sorted(s)]) for s in subsets}
    for fam in itertools.combinations_with_replacement(subsets, ell):
        actual = subspace_intersection([spans[s] for s in fam]).dim
        if actual != generic_dim_partition(SetFamily(n, k, fam)).dimension:
            return False
    return True


def attainable_by_search(code, pattern):
    """Try every choice of rows from the left kernels (small fields, k = 2)."""
    F, k = code.field, code.k
    G = code.generator
    options = []
    for s in pattern.sets:
        vecs = [v for v in itertools.product(range(F.p), repeat=k)
                if any(v) and all(sum(a * b for a, b in zip(v, G.column(e - 1))) % F.p == 0 for e in s)]
        options.append(vecs)
    return any(rank(MatrixFp.from_rows(F, rows)) == k for rows in itertools.product(*options))


def min_distance(code):
    return min(sum(1 for x in c if x) for c in codewords(code) if any(c))


# ---------------------------------------------------------------------------


def test_vandermonde_examples():
    assert vandermonde(F7, [1, 2, 3], 1).generator.to_lists() == [[1, 1, 1]]
    assert vandermonde(F7, [1, 2, 3], 2).generator.to_lists() == [[1, 1, 1], [1, 2, 3]]
    for seed in range(10):
        assert is_mds(random_rs(F7, 5, 3, seed))
    with pytest.raises(ValueError):
        vandermonde(F7, [1, 1, 2], 2)


def test_grs_dual_example_and_exhaustive_dual():
    code = vandermonde(F7, [1, 2, 3], 1)
    H = grs_dual(code).generator
    assert H.to_lists() == [[4, 6, 4], [4, 5, 5]]
    assert all(x == 0 for r in (code.generator @ H.T).rows for x in r)
    dual = {v for v in itertools.product(range(7), repeat=3) if sum(v) % 7 == 0}
    rowspace = {tuple((a * x + b * y) % 7 for x, y in zip(*H.rows)) for a in range(7) for b in range(7)}
    assert dual == rowspace


def test_grs_dual_is_scaled_vandermonde_and_involutive():
    for seed in range(20):
        code = random_rs(GF(13), 6, 2, seed)
        H = grs_dual(code).generator
        assert all(x == 0 for r in (code.generator @ H.T).rows for x in r)
        # dividing column i by H[0][i] leaves the Vandermonde matrix on the same points
        for i, a in enumerate(code.rs_points):
            s = H[0, i]
            assert all(H[j, i] == s * pow(a, j, 13) % 13 for j in range(H.nrows))
        back = dual_code(LinearCode(H))
        assert rank(back.generator.vstack(code.generator)) == code.k
    with pytest.raises(ValueError):
        grs_dual(LinearCode.from_rows(F7, [[1, 2]]))


def test_is_mds_examples():
    assert is_mds(vandermonde(F7, [0, 1, 2, 3], 2))
    assert not is_mds(LinearCode.from_rows(F7, [[1, 0, 1], [0, 0, 1]]))
    F2 = GF(2)
    count = 0
    for flat in itertools.product(range(2), repeat=8):
        G = MatrixFp.from_rows(F2, [flat[:4], flat[4:]])
        if rank(G) == 2:
            count += 1
            assert not is_mds(LinearCode(G))
    assert count == 210


def test_is_mds_ell_examples():
    for seed in range(5):
        code = random_rs(BIG, 6, 3, seed)
        assert is_mds_ell(code, 1) is True and is_mds_ell(code, 2) is True
        assert is_mds_ell(code, 3) is True
    planted = planted_concurrent_lines(BIG, 6, 1)
    bad = is_mds_ell(planted, 3)
    assert isinstance(bad, SetFamily) and generic_dim_partition(bad).dimension == 0
    assert is_mds_ell(planted, 2) is True
    not_mds = planted_non_mds(BIG, 5, 2, 0)
    fam = is_mds_ell(not_mds, 2)
    assert isinstance(fam, SetFamily) and fam.sets[0] == fam.sets[1]
    with pytest.raises(BudgetExceeded):
        is_mds_ell(random_rs(BIG, 6, 3, 0), 3, budget=10)


def test_is_mds_ell_matches_definition():
    codes = [random_rs(BIG, 6, 3, 1), planted_concurrent_lines(BIG, 6, 2)]
    codes += [random_code(GF(5), 5, 2, s) for s in range(4)]
    codes += [random_rs(GF(7), 5, 2, s) for s in range(2)]
    for code in codes:
        for ell in (2, 3):
            assert (is_mds_ell(code, ell) is True) == mds_ell_by_definition(code, ell)


def test_attain_examples():
    code = random_rs(BIG, 5, 3, 4)
    cert = attain_pattern(code, ZeroPattern.of(5, 3, [(), (), ()]))
    assert cert.m == MatrixFp.identity(BIG, 3)
    for pat in maximal_patterns(5, 3, 2):
        assert check_gzp_certificate(code, attain_pattern(code, pat))
    for pat in maximal_patterns(5, 3, 3):
        res = attain_pattern(code, pat)
        assert isinstance(res, GzpCertificate) and check_gzp_certificate(code, res)
    with pytest.raises(PreconditionError):
        attain_pattern(code, ZeroPattern.of(5, 3, [{1, 2}, {1, 2}, {3}]))


def test_attain_failure_on_planted_code():
    code = planted_concurrent_lines(BIG, 6, 3)
    fam = is_mds_ell(code, 3)
    pat = ZeroPattern(6, 3, fam.sets)
    assert is_gzp(pat)
    res = attain_pattern(code, pat)
    assert isinstance(res, AttainFailure) and res.rank < 3


def test_certificate_checker_rejects_tampering():
    code = random_rs(BIG, 5, 3, 4)
    pat = next(maximal_patterns(5, 3, 1))
    cert = attain_pattern(code, pat)
    rows = [list(r) for r in cert.m.rows]
    rows[0][0] += 1
    assert not check_gzp_certificate(code, GzpCertificate(pat, MatrixFp.from_rows(BIG, rows), pat))


def test_attain_matches_exhaustive_search():
    for q in (5, 7):
        F = GF(q)
        for seed in range(6):
            code = random_code(F, 4, 2, seed)
            for pat in list(maximal_patterns(4, 2, 2)):
                got = not isinstance(attain_pattern(code, pat), AttainFailure)
                assert got == attainable_by_search(code, pat)


def test_is_gzp_ell_examples():
    code = random_rs(BIG, 5, 3, 9)
    assert is_gzp_ell(code, 2) is True and is_gzp_ell(code, 3) is True
    planted = planted_concurrent_lines(BIG, 6, 5)
    res = is_gzp_ell(planted, 3)
    assert isinstance(res, ZeroPattern) and isinstance(attain_pattern(planted, res), AttainFailure)
    assert is_gzp_ell(planted, 2) is True
    assert isinstance(is_gzp_ell(planted_non_mds(BIG, 5, 3, 1), 2), MdsViolation)


def test_ld_mds_examples():
    for seed in range(5):
        code = random_rs(GF(11), 5, 2, seed)
        assert is_ld_mds_le(code, 1, "direct") is True and is_ld_mds_le(code, 1, "dual") is True
    code = dual_code(planted_concurrent_lines(BIG, 6, 7))
    for strategy in ("dual", "direct"):
        w = is_ld_mds_le(code, 2, strategy)
        assert w is not True and check_ldmds_witness(code, w) and len(w.vectors) <= 3
    with pytest.raises(ValueError):
        is_ld_mds_le(code, 2, "sideways")


def test_ld_mds_strategies_agree_on_random_codes():
    rng = make_rng(77)
    for trial in range(200):
        q = [2, 3, 5, 7, 11, 13][trial % 6]
        k = 1 + trial % 2
        n = int(rng.integers(k, 6))
        code = random_code(GF(q), n, k, trial)
        for L in (1, 2):
            a = is_ld_mds_le(code, L, "direct")
            b = is_ld_mds_le(code, L, "dual")
            assert (a is True) == (b is True)
            for w in (a, b):
                if w is not True:
                    assert check_ldmds_witness(code, w)


def test_non_mds_code_fails_level_one():
    code = planted_non_mds(GF(11), 5, 2, 3)
    for strategy in ("dual", "direct"):
        w = is_ld_mds_le(code, 1, strategy)
        assert w is not True and w.level == 1 and check_ldmds_witness(code, w)


def test_brute_force_examples():
    for q, n, k, seed in [(7, 4, 2, 0), (5, 4, 2, 1), (11, 5, 2, 2), (7, 5, 3, 3)]:
        code = random_code(GF(q), n, k, seed)
        singleton = min_distance(code) == n - k + 1
        assert (brute_force_average_radius(code, 1, 10 ** 4) is True) == singleton == is_mds(code)
    code = None
    for seed in range(50):
        cand = random_rs(F7, 4, 2, seed)
        if is_ld_mds_le(cand, 2, "dual") is True:
            code = cand
            break
    assert code is not None and brute_force_average_radius(code, 2, 10 ** 4) is True
    with pytest.raises(BudgetExceeded):
        brute_force_average_radius(random_code(GF(13), 5, 3, 0), 1, 1000)


def test_brute_force_detects_planted_witness():
    code = dual_code(planted_concurrent_lines(GF(13), 6, 11))
    assert is_ld_mds_le(code, 2, "dual") is not True
    levels = [brute_force_average_radius(code, L, 10 ** 5) for L in (1, 2)]
    found = [r for r in levels if r is not True]
    assert found
    words, y = found[0]
    L = len(words) - 1
    assert len(set(words)) == L + 1
    assert sum(sum(1 for a, b in zip(c, y) if a != b) for c in words) <= L * (code.n - code.k)


def test_radius_examples():
    assert radius_from_params(Fraction(1, 2), 1) == Fraction(1, 4)
    assert radius_from_params(Fraction(1, 2), 2) == Fraction(1, 3)
    with pytest.raises(ValueError):
        radius_from_params(1, 2)


def test_c_constant_and_trial_report():
    assert c_constant(6, 3, 2) == 144 * 42 ** 3 == 10_668_672
    rep = random_rs_trial(6, 3, 2, BIG, 3, 1)
    assert rep.failures == 0 and rep.c == 10_668_672
    assert rep.error_bound == Fraction(10_668_672, MERSENNE_61)
    assert random_rs_trial(6, 3, 2, BIG, 3, 1) == rep
    out = rs_trial_from_points(BIG, [1, 2, 2, 3, 4, 5], 3, 2)
    assert not out.ok and "repeated" in out.reason
    with pytest.raises(ValueError):
        random_rs_trial(6, 3, 2, GF(10007), 1, 0)


def test_parallel_trials_match_serial():
    a = random_rs_trial(5, 2, 2, BIG, 4, 3)
    b = random_rs_trial(5, 2, 2, BIG, 4, 3, workers=2)
    assert a.outcomes == b.outcomes


def test_rs_with_equal_pair_sums_is_not_mds3():
    # the span of columns a, b has normal (ab, -(a+b), 1); equal sums make the three normals dependent
    code = vandermonde(BIG, [1, 2, 3, 4, 5, 6], 3)
    fam = SetFamily.of(6, 3, [{1, 6}, {2, 5}, {3, 4}])
    actual = subspace_intersection([column_span(code.generator, sorted(e - 1 for e in s)) for s in fam.sets]).dim
    assert actual == 1 and generic_dim_partition(fam).dimension == 0
    assert is_mds(code) and is_mds_ell(code, 3) is not True
    assert isinstance(is_gzp_ell(code, 3), ZeroPattern)
