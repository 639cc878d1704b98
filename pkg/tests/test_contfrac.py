from fractions import Fraction

import pytest

from pellpascal.contfrac import (
    CFExpansion,
    approximation_table,
    convergents,
    expand,
    is_diophantine,
    table_constant,
    table_csv,
    TABLE_CONSTANTS,
)
from pellpascal.exactnum import AlgebraicRoot
from pellpascal.pell import sqrt_cf

F = Fraction


def test_expand_sqrt2():
    exp = expand(AlgebraicRoot(F(2), 2), 4)
    assert exp.quotients == (1, 2, 2, 2)


def test_expand_cbrt4_reaches_reference_convergent():
    exp = expand(AlgebraicRoot(F(4), 3), 13)
    convs = [(c.p, c.q) for c in convergents(exp)]
    assert (286, 227) not in convs  # that one belongs to 2^(1/3)
    assert (148195, 93357) in convs


def test_expand_cbrt2_reaches_286_227():
    exp = expand(AlgebraicRoot(F(2), 3), 8)
    convs = [(c.p, c.q) for c in convergents(exp)]
    assert convs[:7] == [(1, 1), (4, 3), (5, 4), (29, 23), (34, 27), (63, 50), (286, 227)]


def test_expand_rejects_rational():
    with pytest.raises(ValueError):
        expand(AlgebraicRoot(F(9), 2), 5)


def test_convergents_first_is_a0():
    exp = expand(AlgebraicRoot(F(8), 2), 6)
    convs = convergents(exp)
    assert (convs[0].p, convs[0].q) == (2, 1)
    assert (convs[1].p, convs[1].q) == (3, 1)


def test_convergent_determinant_identity():
    for name, root in TABLE_CONSTANTS:
        convs = convergents(expand(root, 20))
        for a, b in zip(convs, convs[1:]):
            assert b.p * a.q - a.p * b.q == (-1) ** (b.index - 1)


def test_convergents_of_sqrt8_contain_reference_row():
    convs = [(c.p, c.q) for c in convergents(expand(AlgebraicRoot(F(8), 2), 10))]
    for pq in [(3, 1), (17, 6), (99, 35), (577, 204)]:
        assert pq in convs


def test_is_diophantine_examples():
    assert is_diophantine(AlgebraicRoot(F(8), 2), 17, 6)
    assert is_diophantine(AlgebraicRoot(F(2), 2), 3, 2)
    # |sqrt(2) - 2| = 0.5857... < 1/1^2, so 2/1 does satisfy the inequality;
    # 3/1 misses it (1.585... > 1)
    assert is_diophantine(AlgebraicRoot(F(2), 2), 2, 1)
    assert not is_diophantine(AlgebraicRoot(F(2), 2), 3, 1)
    assert not is_diophantine(AlgebraicRoot(F(4), 3), 19, 22)
    assert not is_diophantine(AlgebraicRoot(F(2), 2), 7, 4)


def test_all_convergents_are_diophantine():
    for name, root in TABLE_CONSTANTS:
        for c in convergents(expand(root, 25)):
            assert is_diophantine(root, c.p, c.q), (name, c)


def test_certification_regression_on_doubled_precision():
    for name, root in TABLE_CONSTANTS:
        e1 = expand(root, 25)
        e2 = expand(root, 25)
        assert e1.quotients == e2.quotients
        # recompute from a much finer enclosure: same quotients
        from pellpascal.contfrac import _quotients_from_enclosure
        from pellpascal.exactnum import refine
        enc = refine(root, 4 * max(e1.certified_bits, 128))
        assert tuple(_quotients_from_enclosure(enc.lo, enc.hi, 25)) == e1.quotients


@pytest.mark.parametrize("d", [2, 3, 8])
def test_expand_agrees_with_pell_cf(d):
    exp = expand(AlgebraicRoot(F(d), 2), 30)
    assert list(exp.quotients) == sqrt_cf(d).quotients(30)


def test_table_flags_exactly_the_misprint():
    report = approximation_table()
    flagged = [(b["name"], f) for b in report["constants"] for f in b["flagged"]]
    assert len(flagged) == 1
    name, entry = flagged[0]
    assert name == "2^(2/3)"
    assert (entry["p"], entry["q"]) == (19, 22)
    assert entry["diophantine"] is False
    assert (entry["expected_p"], entry["expected_q"]) == (19, 12)


def test_table_all_other_printed_entries_match():
    report = approximation_table()
    for block in report["constants"]:
        for e in block["printed_entries"]:
            if (e["p"], e["q"]) == (19, 22):
                continue
            assert e["match"] == "yes", (block["name"], e)


def test_table_fills_blank_row():
    report = approximation_table()
    blank = next(b for b in report["constants"] if b["name"] == "(4/3)^(1/6)")
    assert blank["status"] == "blank"
    assert len(blank["convergents"]) >= 8
    root = table_constant("(4/3)^(1/6)")
    for c in blank["convergents"][:8]:
        assert is_diophantine(root, c["p"], c["q"])


def test_table_csv_shape():
    text = table_csv()
    lines = text.strip().splitlines()
    assert lines[0] == "constant,index,p,q,diophantine,matches_reference"
    assert sum(1 for ln in lines[1:] if ln.endswith(",no")) > 0
    assert all(ln.count(",") == 5 for ln in lines)
