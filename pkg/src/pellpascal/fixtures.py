"""Reference data as printed in the source tables for this problem family.

Everything here is stored exactly as published, typos included; the
verification layers (identities, sequence regeneration, convergent tables)
diff computation against these fixtures and report discrepancies rather
than silently correcting them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import AffineSub, Poly

F = Fraction

# -- printed solution lists ------------------------------------------------------

#: median, order 2: the classic (n, m) pairs
MEDIAN2_PAIRS = [
    (1, 1), (8, 6), (49, 35), (288, 204), (1681, 1189), (9800, 6930),
    (57121, 40391), (332928, 235416), (1940449, 1372105), (11309768, 7997214),
]

#: third quartile, order 2: (n, m) with m on the half grid (m given in quarters)
Q3_2_PAIRS_QUARTERS = [
    (5, 18), (20, 70), (76, 264), (285, 988), (1065, 3690), (3976, 13774),
    (14840, 51408), (55385, 191860), (206701, 716034), (771420, 2672278),
    (2878980, 9973080),
]

#: the four printed branches of the order-4 quadrature u^2 = 8(2j-1)^2 + 8.
#: Each row lists (u, j) tuples exactly as published: two shared trivial
#: tuples followed by the first two proper terms of that branch.
QUADRATURE_BRANCH_ROWS = {
    "branch-676": [(4, 1), (20, 4), (676, 120), (780100, 137904)],
    "branch-116": [(4, 1), (20, 4), (116, 21), (133844, 23661)],
    "branch-3940": [(4, 1), (20, 4), (3940, 697), (4546756, 803761)],
    "branch-22964": [(4, 1), (20, 4), (22964, 460), (26500436, 4684660)],
}

#: indices of each branch row inside the single unit-orbit of the quadrature
#: problem (t0 = (4,1), t1 = (20,7), ...; j = (w+1)/2)
QUADRATURE_BRANCH_ORBIT_INDEX = {
    "branch-676": [0, 1, 3, 7],
    "branch-116": [0, 1, 2, 6],
    "branch-3940": [0, 1, 4, 8],
    "branch-22964": [0, 1, 5, 9],
}

#: quasi-solution lists for the order-3 median, printed as (m+1, n+1)
QUASI3_INTEGER_SHIFTED = [
    (10, 12), (14, 17), (114, 143), (391, 492), (1903, 2397), (2407, 3032), (74098, 93357),
]
#: half-integer track, printed as (m+1, n+1) with m+1 on the half grid
QUASI3_HALF_SHIFTED = [
    (F(7, 2), 4), (F(9, 2), 5), (F(47, 2), 29), (F(55, 2), 34), (F(101, 2), 63), (F(455, 2), 286),
]

# -- printed convergent rows ---------------------------------------------------

#: Published approximation table: constant name -> list of printed (p, q)
#: entries, or None when the table prints no row for that constant.  The
#: (4/3)^(1/6) row is printed blank.
PRINTED_CONVERGENTS: dict[str, list[tuple[int, int]] | None] = {
    "2^(3/2)": [(3, 1), (17, 6), (99, 35), (577, 204)],
    "2^(2/3)": [(1, 1), (3, 2), (8, 5), (19, 22), (27, 17), (100, 63), (227, 143),
                (781, 492), (1008, 635), (3805, 2397), (4813, 3032), (148195, 93357)],
    "2^(1/3)": [(1, 1), (4, 3), (5, 4), (29, 23), (34, 27), (63, 50), (286, 227)],
    "2^(1/2)": [(17, 12), (99, 70), (577, 408)],
    "3^(1/2)": None,
    "2^(5/4)": None,
    "2^(4/5)": None,
    "2^(1/6)": None,
    "(4/3)^(1/6)": [],
}

# -- printed curve table (the published appendix) -------------------------------

_X, _Y = Poly.var("x"), Poly.var("y")


@dataclass(frozen=True)
class PrintedCurve:
    family_name: str
    poly: Poly
    sub: AffineSub


#: The appendix curve table exactly as printed.  The substitutions use the
#: publisher's shifted index conventions (and one swapped column); the
#: identity checker reports the shift or swap that reconciles each row.
PRINTED_CURVE_TABLE = [
    PrintedCurve("k2.median", _X**2 - 8 * _Y**2 - 1,
                 AffineSub.of(("x", 1, 2, "n"), ("y", 0, 1, "m"))),
    PrintedCurve("k2.q3", _X**2 - 3 * _Y**2 + 2,
                 AffineSub.of(("x", 1, 2, "n"), ("y", 1, 4, "m"))),
    PrintedCurve("k3.median", 4 * _X**3 - _Y**3 - 4 * _X + _Y,
                 AffineSub.of(("x", 0, 1, "n"), ("y", -1, 2, "m"))),
    PrintedCurve("k4.median", _X**4 - 32 * _Y**4 + 32 * _Y**2 - 10 * _X**2 + 9,
                 AffineSub.of(("x", -1, 2, "n"), ("y", -1, 1, "m"))),
    PrintedCurve("k5.median", 16 * _X**5 - _Y**5 + 10 * _Y**3 - 80 * _X**3 + 64 * _X - 9 * _Y,
                 AffineSub.of(("x", -1, 1, "n"), ("y", -3, 2, "m"))),
    PrintedCurve("k6.median", _X**6 - 2 * _Y**6 - 35 * _X**4 + 40 * _Y**4 + 259 * _X**2 - 128 * _Y**2 - 225,
                 AffineSub.of(("x", -3, 2, "n"), ("y", -4, 2, "m"))),
]

# -- printed quartile reductions -------------------------------------------------

_N, _M, _T, _S, _K = Poly.var("n"), Poly.var("m"), Poly.var("t"), Poly.var("s"), Poly.var("k")


@dataclass(frozen=True)
class PrintedReduction:
    """One printed rewriting step: lhs(n) == rhs(aux var) under aux -> m map.

    check = lhs - rhs composed with the aux substitution must equal
    scale * residual of the family; a nonzero difference is an erratum.
    """

    name: str
    family_name: str
    lhs: Poly
    rhs: Poly
    aux: str
    aux_offset: Fraction  # aux variable = aux_slope * m + aux_offset
    aux_slope: Fraction = F(1)
    note: str = ""


PRINTED_REDUCTIONS = [
    # order-2 median: (2n+1)^2 = 8 m^2 + 1
    PrintedReduction("order2-median-pell", "k2.median",
                     (2 * _N + 1) ** 2, 8 * _M**2 + 1, "m", F(0)),
    # order-2 third quartile: (4m+1)^2 = 3 (2n+1)^2 - 2
    PrintedReduction("order2-q3-pell", "k2.q3",
                     (4 * _M + 1) ** 2 - 3 * (2 * _N + 1) ** 2 + 2, Poly.const(0), "m", F(0)),
    # order-3 median: 4(n+1)^3 - 4(n+1) = (2m+1)^3 - (2m+1)
    PrintedReduction("order3-median-cubic", "k3.median",
                     4 * (_N + 1) ** 3 - 4 * (_N + 1), (2 * _M + 1) ** 3 - (2 * _M + 1), "m", F(0)),
    # order-3 median, half grid: 4n(n+1)(n+2) = (2t-1) 2t (2t+1) with m = t - 1/2
    PrintedReduction("order3-median-half", "k3.median",
                     4 * _N * (_N + 1) * (_N + 2), (2 * _T - 1) * (2 * _T) * (2 * _T + 1),
                     "t", F(1, 2)),
    # order-4 median: the quartic identity behind the quadrature
    PrintedReduction("order4-median-quartic", "k4.median",
                     (2 * _N + 3) ** 4 - 32 * (_M + 1) ** 4 + 32 * (_M + 1) ** 2
                     - 10 * (2 * _N + 3) ** 2 + 9, Poly.const(0), "m", F(0)),
    # order-5 median: 16x^5 - 80x^3 + 64x = y^5 - 10y^3 + 9y at x=n+2, y=2m+3
    PrintedReduction("order5-median-quintic", "k5.median",
                     16 * (_N + 2) ** 5 - 80 * (_N + 2) ** 3 + 64 * (_N + 2),
                     (2 * _M + 3) ** 5 - 10 * (2 * _M + 3) ** 3 + 9 * (2 * _M + 3), "m", F(0)),
    # order-3 first quartile: 8(n+1)^3 = 4(2k-1)^3 + 8(n+1) - 7(2k-1) + 3, m+1 = k+1/4
    PrintedReduction("order3-q1-reduction", "k3.q1",
                     8 * (_N + 1) ** 3,
                     4 * (2 * _K - 1) ** 3 + 8 * (_N + 1) - 7 * (2 * _K - 1) + 3,
                     "k", F(3, 4)),
    # order-3 third quartile: 24(n+1)^3 = 4(2k-1)^3 + 24(n+1) - 7(2k-1) - 3, m+1 = k-1/4
    PrintedReduction("order3-q3-reduction", "k3.q3",
                     24 * (_N + 1) ** 3,
                     4 * (2 * _K - 1) ** 3 + 24 * (_N + 1) - 7 * (2 * _K - 1) - 3,
                     "k", F(5, 4)),
    # order-4 first quartile as printed (known bad constant/linear terms)
    PrintedReduction("order4-q1-reduction", "k4.q1",
                     (2 * _N + 3) ** 4 - 10 * (2 * _N + 3) ** 2 + 9,
                     4 * _T**4 + 106 * _T**2 + 2772 * _T + F(23409, 4),
                     "t", F(3, 2), F(2),
                     note="printed right-hand side fails the identity check"),
    # order-4 third quartile as printed (known bad constant)
    PrintedReduction("order4-q3-reduction", "k4.q3",
                     3 * ((2 * _N + 3) ** 4 - 10 * (2 * _N + 3) ** 2 + 9),
                     4 * (_T**4 - F(11, 2) * _T**2 - 3 * _T - F(27, 8)),
                     "t", F(5, 2), F(2),
                     note="printed right-hand side fails the identity check"),
    # order-6 third quartile, first reduction: s = 2m + 8
    PrintedReduction("order6-q3-reduction", "k6.q3",
                     3 * ((2 * _N + 5) ** 6 - 35 * (2 * _N + 5) ** 4 + 259 * (2 * _N + 5) ** 2 - 225),
                     4 * (_S**6 - 21 * _S**5 + 160 * _S**4 - 540 * _S**3 + 784 * _S**2 - 384 * _S),
                     "s", F(8), F(2)),
    # order-6 third quartile, eliminated form: t = 2k-3 with m+4 = k+1/4
    PrintedReduction("order6-q3-eliminated", "k6.q3",
                     3 * (2 * _N + 5) ** 6 - 105 * (2 * _N + 5) ** 4 + 777 * (2 * _N + 5) ** 2,
                     4 * _T**6 - 95 * _T**4 - 60 * _T**3 + F(1939, 4) * _T**2
                     + F(1500, 4) * _T + F(6075, 16),
                     "t", F(9, 2), F(2)),
]

# -- closed-form solution sequences (surd expressions) ----------------------------


@dataclass(frozen=True)
class SurdForm:
    """den * value(alpha) = sum of (a + b*sqrt(d)) * (p + q*sqrt(d))^alpha terms."""

    d: int
    den: int
    terms: tuple[tuple[int, int, int, int], ...]  # (a, b, p, q)


@dataclass(frozen=True)
class SurdSequence:
    """A printed closed form for one coordinate pair of a solution sequence.

    orbit_index maps the form's index alpha onto the position inside the
    recurrence-generated orbit that the artifact uses as ground truth.
    """

    name: str
    x_form: SurdForm
    y_form: SurdForm
    orbit_index: "callable"  # alpha -> orbit position
    alpha_start: int = 1


SURD_SEQUENCES = [
    # order-2 median closed form: n and m from powers of (3 +- 2*sqrt(2))
    SurdSequence(
        "median2",
        x_form=SurdForm(2, 4, ((-2, 0, 1, 0), (1, 0, 3, -2), (1, 0, 3, 2))),   # n
        y_form=SurdForm(2, 8, ((0, -1, 3, -2), (0, 1, 3, 2))),                 # m
        orbit_index=lambda a: a - 1,
    ),
    # order-2 third quartile closed form in (y, x) = (4m+1, 2n+1)
    SurdSequence(
        "q3-2",
        x_form=SurdForm(3, 2, ((-1, 1, 2, 1), (-1, -1, 2, -1))),               # 4m+1
        y_form=SurdForm(3, 6, ((3, -1, 2, 1), (3, 1, 2, -1))),                 # 2n+1
        orbit_index=lambda a: a - 1,
    ),
    # the four quadrature branches in (u, w); printed j = (w+1)/2 forms
    SurdSequence(
        "branch-676",
        x_form=SurdForm(2, 1, ((2, 1, 577, -408), (2, -1, 577, 408))),         # u
        y_form=SurdForm(2, 4, ((2, 0, 1, 0), (-1, 1, 577, 408), (-1, -1, 577, -408))),  # j
        orbit_index=lambda a: 4 * a - 1,
    ),
    SurdSequence(
        "branch-116",
        x_form=SurdForm(2, 1, ((10, 7, 577, -408), (10, -7, 577, 408))),
        y_form=SurdForm(2, 4, ((2, 0, 1, 0), (-7, -5, 577, -408), (-7, 5, 577, 408))),
        orbit_index=lambda a: 4 * a - 2,
    ),
    SurdSequence(
        "branch-3940",
        x_form=SurdForm(2, 1, ((2, 1, 577, 408), (2, -1, 577, -408))),
        y_form=SurdForm(2, 4, ((2, 0, 1, 0), (1, 1, 577, 408), (1, -1, 577, -408))),
        orbit_index=lambda a: 4 * a,
    ),
    SurdSequence(
        "branch-22964",
        x_form=SurdForm(2, 1, ((10, 7, 577, 408), (10, -7, 577, -408))),
        y_form=SurdForm(2, 4, ((2, 0, 1, 0), (7, 5, 577, 408), (7, -5, 577, -408))),
        orbit_index=lambda a: 4 * a + 1,
    ),
    # the unconstrained quadrature sequence in (u, v)
    SurdSequence(
        "order4-quad-uv",
        x_form=SurdForm(2, 1, ((2, 1, 3, -2), (2, -1, 3, 2))),                 # u
        y_form=SurdForm(2, 2, ((-1, 1, 3, 2), (-1, -1, 3, -2))),               # v
        orbit_index=lambda a: a - 1,
    ),
]
