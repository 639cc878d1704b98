from fractions import Fraction

import pytest

from pellpascal.exactnum import QuarterInt
from pellpascal.pascal import all_families, family, residual
from pellpascal.search import (
    MedianDomain,
    auto_sieve_moduli,
    exhaustive,
    exhaustive_oracle,
    invert_m,
    partition,
    quadrature_scan_order4,
    quadrature_scan_order6,
    quasi_generate,
    quasi_tracks,
    scaled_sides,
    verify_pruned_sample,
    _poly_eval,
)

F = Fraction
D = MedianDomain


def test_partition_examples():
    assert partition(10, 4) == [(2, 5), (6, 9), (10, 10)]
    assert len(partition(10**6, 10**5)) == 10
    ranges = partition(12345, 1000)
    assert ranges[0][0] == 2 and ranges[-1][1] == 12345
    for (a, b), (c, _) in zip(ranges, ranges[1:]):
        assert c == b + 1


def test_scaled_sides_match_residual():
    for fam in all_families():
        lhs, rhs = scaled_sides(fam)
        k = fam.order
        fact = [1, 1, 2, 6, 24, 120, 720][k]
        scale = 3 * 4**k * fact
        for n in range(0, 12):
            for j in range(0, 20):
                want = residual(fam, n, F(j, 4)) * scale
                assert _poly_eval(lhs, n) - _poly_eval(rhs, j) == want


def test_rhs_strictly_increasing_on_quarter_grid():
    # monotonicity that justifies bracket/binary-search inversion (m >= 1)
    for fam in all_families():
        _, rhs = scaled_sides(fam)
        prev = _poly_eval(rhs, 4)
        for j in range(5, 4 * 10**4, 37):  # strided sample up to m = 10^4
            cur = _poly_eval(rhs, j)
            assert cur > prev
            prev = cur
    # dense check on the small range where failures would hide
    for fam in all_families():
        _, rhs = scaled_sides(fam)
        vals = [_poly_eval(rhs, j) for j in range(4, 400)]
        assert all(b > a for a, b in zip(vals, vals[1:]))


def test_invert_examples():
    assert invert_m(family(6), 11, D.INTEGERS) == QuarterInt(40)
    assert invert_m(family(2, "q3"), 5, D.HALVES) == QuarterInt(18)
    assert invert_m(family(3), 100, D.QUARTERS) is None
    assert invert_m(family(2), 8, D.INTEGERS) == QuarterInt(24)
    assert invert_m(family(2), 7, D.QUARTERS) is None


def test_invert_validation():
    with pytest.raises(ValueError):
        invert_m(family(2), 0)


def test_exhaustive_median2_small():
    rep = exhaustive(family(2), 10**4, D.INTEGERS)
    assert rep.solution_pairs() == [
        (8, 6), (49, 35), (288, 204), (1681, 1189), (9800, 6930)]
    assert {(n, m.value) for n, m in rep.trivial_excluded} == {(0, 0), (1, 1)}


def test_exhaustive_median6_small():
    rep = exhaustive(family(6), 10**4, D.QUARTERS)
    assert rep.solution_pairs() == [(11, 10)]


def test_exhaustive_median3_halves_empty():
    rep = exhaustive(family(3), 10**4, D.HALVES)
    assert rep.solutions == []


def test_exhaustive_q14_quarters_empty():
    rep = exhaustive(family(4, "q1"), 10**4, D.QUARTERS)
    assert rep.solutions == []


def test_exhaustive_rejects_bad_bound():
    with pytest.raises(ValueError):
        exhaustive(family(2), 1)


@pytest.mark.parametrize("quartile", ["median", "q1", "q3"])
@pytest.mark.parametrize("order", [2, 3, 4, 5, 6])
def test_oracle_equivalence_all_families(order, quartile):
    fam = family(order, quartile)
    for dom in D:
        rep = exhaustive(fam, 300, dom)
        oracle = exhaustive_oracle(fam, 300, dom)
        assert {(n, m.quarters) for n, m in rep.solutions} == set(oracle["solutions"])
        assert {(n, m.quarters) for n, m in rep.trivial_excluded} == set(oracle["trivial"])


def test_fast_and_incremental_paths_agree():
    fam = family(2, "q3")
    for dom in D:
        fast = exhaustive(fam, 5000, dom, allow_fast=True)
        slow = exhaustive(fam, 5000, dom, allow_fast=False)
        assert fast.solutions == slow.solutions
        assert fast.trivial_excluded == slow.trivial_excluded


def test_workers_merge_deterministically():
    fam = family(3)
    a = exhaustive(fam, 3 * 10**4, D.QUARTERS, workers=1, chunk=4096)
    b = exhaustive(fam, 3 * 10**4, D.QUARTERS, workers=4, chunk=4096)
    assert a.solutions == b.solutions
    assert a.trivial_excluded == b.trivial_excluded
    assert a.candidates_tested == b.candidates_tested
    assert a.candidates_pruned == b.candidates_pruned


def test_pruned_candidates_reverify_nonzero():
    for fam in [family(6), family(2, "q3"), family(4)]:
        rep = exhaustive(fam, 2 * 10**4, D.QUARTERS)
        assert rep.pruned_sample, fam.name
        assert verify_pruned_sample(rep)


def test_auto_sieve_moduli_deterministic():
    for fam in all_families():
        a = auto_sieve_moduli(fam)
        assert a == auto_sieve_moduli(fam)
        assert all(p >= 2 for p in a)


def test_quadrature_order4_excluded_pair_is_only_hit():
    scan = quadrature_scan_order4(10**12)
    assert [(h["u"], h["j"]) for h in scan["hits"]] == [(4, 1), (20, 4)]
    assert all(h["trivial"] for h in scan["hits"])
    # the seed itself passes the side conditions: u+5 = 9, j = 1
    assert scan["hits"][0] == {"u": 4, "j": 1, "n": 0, "m": 0, "trivial": True}


def test_quadrature_order6_hits():
    scan = quadrature_scan_order6(10**4)
    assert [(h["u"], h["v"]) for h in scan["hits"]] == [(49, 36), (729, 576)]
    assert [(h["n"], h["m"]) for h in scan["hits"]] == [(1, 1), (11, 10)]
    assert scan["half_integer_hits"] == []
    # the cubic has three roots over the degenerate column u in {1, 9, 25}
    assert (9, 4) in scan["integer_points"]
    assert (9, 16) in scan["integer_points"]
    assert (9, 4) in scan["rejected_points"]


def test_quasi_tracks_available():
    assert quasi_tracks(family(3)) == ["integer", "half"]
    assert quasi_tracks(family(2)) == ["integer"]
    assert quasi_tracks(family(5, "q1")) == []


def test_quasi_median3_integer_matches_reference():
    entries = [e for e in quasi_generate(family(3), 16, "integer") if e.on_grid]
    got = [(e.m.value + 1, e.n + 1) for e in entries[:7]]
    want = [(F(10), 12), (F(14), 17), (F(114), 143), (F(391), 492),
            (F(1903), 2397), (F(2407), 3032), (F(74098), 93357)]
    assert got == want


def test_quasi_median3_half_matches_reference():
    entries = [e for e in quasi_generate(family(3), 14, "half") if e.on_grid]
    got = [(e.m.value + 1, e.n + 1) for e in entries[:6]]
    want = [(F(7, 2), 4), (F(9, 2), 5), (F(47, 2), 29),
            (F(55, 2), 34), (F(101, 2), 63), (F(455, 2), 286)]
    assert got == want


def test_quasi_residuals_and_rounding_flags():
    for e in quasi_generate(family(4), 12, "integer"):
        assert residual(family(4), e.n, e.m) == e.residual
        if not e.on_grid:
            assert e.m_exact != e.m.value or e.n_exact != e.n


def test_quasi_q3_order2_bounded_residual():
    entries = [e for e in quasi_generate(family(2, "q3"), 14, "half") if e.on_grid]
    ratios = [e.order_ratio for e in entries[:10]]
    assert max(ratios) <= F(1, 4)  # order ratio for k=2 is the residual itself


def test_quasi_count_validation():
    with pytest.raises(ValueError):
        quasi_generate(family(2), 0)
    with pytest.raises(KeyError):
        quasi_generate(family(2), 3, "half")
