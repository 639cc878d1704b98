import random
from fractions import Fraction

import pytest

from pellpascal.pascal import curve, curve_by_name, family
from pellpascal.poly import Poly
from pellpascal.search import MedianDomain, exhaustive
from pellpascal.sieve import (
    admissible_table,
    prove_empty,
    prune_fraction,
    recheck_empty,
    table_json,
)

F = Fraction
x, y = Poly.var("x"), Poly.var("y")


def test_order3_mod3_gives_no_criterion():
    table = admissible_table(curve_by_name("k3.median"), 3)
    assert table.admissible_count == 9
    assert table.fraction == 1


def test_order5_mod5_gives_no_criterion():
    table = admissible_table(curve_by_name("k5.median"), 5)
    assert table.fraction == 1


def test_order4_mod5_prunes_near_half():
    table = admissible_table(curve_by_name("k4.median"), 5)
    assert table.admissible_count == 14
    assert prune_fraction(table) == F(11, 25)


def test_order6_mod7_structure():
    table = admissible_table(curve_by_name("k6.median"), 7)
    # x nonzero with y in {1, 6} is never admissible
    for xr in range(1, 7):
        for yr in (1, 6):
            assert not table.admits(xr, yr)
    # x nonzero, y in {0,2,3,4,5} always admissible
    for xr in range(1, 7):
        for yr in (0, 2, 3, 4, 5):
            assert table.admits(xr, yr)
    assert table.admissible_count == 32
    assert prune_fraction(table) == F(17, 49)


def test_admissible_matches_direct_evaluation():
    rng = random.Random(7)
    for name, p in [("k4.median", 5), ("k6.median", 7), ("k3.median", 9), ("k2.q3", 8)]:
        poly = curve_by_name(name)
        table = admissible_table(poly, p)
        for _ in range(100):
            xr, yr = rng.randrange(p), rng.randrange(p)
            direct = poly.eval({"x": xr, "y": yr}) % p == 0
            assert table.admits(xr, yr) == direct


def test_prove_empty_half_branch():
    half = curve_by_name("order4-half-quad")
    # at modulus 8 the table is empty: the 64-pair certificate
    assert prove_empty(half, [8]) == 8
    assert recheck_empty(half, 8)
    # modulus 4 certifies already (u^2 ≡ 2 mod 4 is impossible); with the
    # first-empty-modulus contract that certificate precedes the mod-8 one
    assert prove_empty(half, [3, 4, 5, 7, 8]) == 4
    assert recheck_empty(half, 4)
    assert prove_empty(half, [3, 5, 7]) is None


def test_prove_empty_nonempty_curve():
    assert prove_empty(curve_by_name("k2.median"), [3, 4, 5, 7, 8, 9]) is None


def test_prove_empty_scaled_circle():
    poly = 4 * x**2 + 4 * y**2 + 2
    assert prove_empty(poly, [4]) == 4


def test_quartile_reduction_curves_have_parity_certificates():
    # the corrected order-4 quartile curves are empty already mod 2 (the odd
    # constant term survives the even coefficients)
    assert prove_empty(curve(family(4, "q1")).poly, [2, 4]) == 2
    assert prove_empty(curve(family(4, "q3")).poly, [2, 4]) == 2
    assert recheck_empty(curve(family(4, "q1")).poly, 4)


def test_sieve_soundness_against_search():
    # every exact solution below 10^4 lands in every admissible table
    for fam in [family(2), family(2, "q3"), family(6)]:
        rec = curve(fam)
        tables = [admissible_table(rec.poly, p) for p in (3, 5, 7, 8, 9, 11)]
        rep = exhaustive(fam, 10**4, MedianDomain.QUARTERS, sieves=None)
        for n, m in rep.solutions + rep.trivial_excluded:
            xv, yv = rec.point(n, m.value)
            if xv.denominator != 1 or yv.denominator != 1:
                continue
            for t in tables:
                assert t.admits(int(xv), int(yv)), (fam.name, n, m, t.modulus)


def test_table_json_roundtrip():
    table = admissible_table(curve_by_name("k4.median"), 5)
    doc = table_json(table, include_pairs=True)
    assert doc["modulus"] == 5
    assert doc["admissible_count"] == 14
    assert len(doc["pairs"]) == 14
    assert doc["prune_fraction"] == "11/25"


def test_modulus_validation():
    with pytest.raises(ValueError):
        admissible_table(curve_by_name("k2.median"), 1)
