"""Simplicial numbers, the median/quartile equation families, their plane
curves, and the asymmetric triangle.

Every family is one specialization of the closed residual form

    C(n+k-1, k) - w*C(m+k-2, k) - C(m+k-2, k-1)

with order k in 2..6 and weight w in {2, 4, 4/3}; the curve registry carries
the verified change of variables onto an integer plane curve together with
the constant whose continued fraction drives the quasi-solutions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import AlgebraicRoot, DyadicInterval, QuarterInt
from .poly import AffineSub, Poly, check_identity

__all__ = [
    "Quartile",
    "EquationFamily",
    "family",
    "all_families",
    "binom",
    "binom_poly",
    "residual",
    "residual_poly",
    "CurveRecord",
    "NoTabulatedCurve",
    "curve",
    "curve_names",
    "curve_by_name",
    "standalone_curves",
    "check_identity",
    "asym_binom",
    "asym_residual",
]


class Quartile(enum.Enum):
    MEDIAN = "median"
    Q1 = "q1"
    Q3 = "q3"

    @property
    def weight(self) -> Fraction:
        return {"median": Fraction(2), "q1": Fraction(4), "q3": Fraction(4, 3)}[self.value]


@dataclass(frozen=True, order=True)
class EquationFamily:
    order: int
    quartile: Quartile

    def __post_init__(self):
        if not 2 <= self.order <= 6:
            raise ValueError("order must be in 2..6")

    @property
    def weight(self) -> Fraction:
        return self.quartile.weight

    @property
    def name(self) -> str:
        return f"k{self.order}.{self.quartile.value}"

    def __str__(self):
        return self.name


def family(order: int, quartile: str | Quartile = Quartile.MEDIAN) -> EquationFamily:
    if isinstance(quartile, str):
        quartile = Quartile(quartile.lower())
    return EquationFamily(order, quartile)


def all_families() -> list[EquationFamily]:
    return [EquationFamily(k, q) for k in range(2, 7) for q in Quartile]


def binom(x: Fraction | int, k: int) -> Fraction:
    """Generalized binomial x(x-1)...(x-k+1)/k! over exact rationals."""
    if k < 0:
        raise ValueError("lower index must be >= 0")
    x = Fraction(x)
    num = Fraction(1)
    for i in range(k):
        num *= x - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num / den


def binom_poly(top: Poly, k: int) -> Poly:
    """binom() applied to a polynomial upper argument."""
    out = Poly.const(1)
    for i in range(k):
        out = out * (top - i)
    den = 1
    for i in range(2, k + 1):
        den *= i
    return out * Fraction(1, den)


def _as_quarter(m) -> Fraction:
    if isinstance(m, QuarterInt):
        return m.value
    f = Fraction(m)
    if (4 * f).denominator != 1:
        raise ValueError(f"median {m} is not on the quarter grid")
    return f


def residual(fam: EquationFamily, n: int, m) -> Fraction:
    """Exact residual; zero iff (n, m) solves the family's equation."""
    if n < 0:
        raise ValueError("n must be >= 0")
    k, w = fam.order, fam.weight
    mv = _as_quarter(m)
    return binom(n + k - 1, k) - w * binom(mv + k - 2, k) - binom(mv + k - 2, k - 1)


def residual_poly(fam: EquationFamily) -> Poly:
    """The residual as an exact polynomial in variables n, m."""
    k, w = fam.order, fam.weight
    n, m = Poly.var("n"), Poly.var("m")
    return binom_poly(n + (k - 1), k) - w * binom_poly(m + (k - 2), k) - binom_poly(m + (k - 2), k - 1)


class NoTabulatedCurve(LookupError):
    """Raised for families the curve table does not cover."""


@dataclass(frozen=True)
class CurveRecord:
    """A verified plane-curve form of one equation family.

    poly(sub(n, m)) == scale * residual(n, m) as polynomials, so integer
    points of the curve correspond exactly to equation solutions.  approx is
    the irrational constant approximated by the recorded ratio of the curve
    coordinates along the solution branch.
    """

    name: str
    family: EquationFamily | None
    poly: Poly
    sub: AffineSub | None
    scale: Fraction | None
    approx: AlgebraicRoot | None = None
    # "x/y" means x-coordinate over y-coordinate tends to the constant
    approx_ratio: str = ""

    def __iter__(self):
        yield self.poly
        yield self.sub

    def substituted(self) -> Poly:
        return self.sub.apply(self.poly)

    def point(self, n, m) -> tuple[Fraction, Fraction]:
        ex, ey = self.sub.entry("x"), self.sub.entry("y")
        nv, mv = Fraction(n), _as_quarter(m)
        return ex.offset + ex.slope * nv, ey.offset + ey.slope * mv


_X, _Y = Poly.var("x"), Poly.var("y")


def _rec(name, fam, poly, x0, x1, y0, y1, scale, base, idx, ratio):
    sub = AffineSub.of(("x", x0, x1, "n"), ("y", y0, y1, "m"))
    return CurveRecord(name, fam, poly, sub, Fraction(scale), AlgebraicRoot(Fraction(base), idx), ratio)


def _build_curve_table() -> dict[str, CurveRecord]:
    f = Fraction
    table = [
        _rec("k2.median", family(2), _X**2 - 8 * _Y**2 - 1, 1, 2, 0, 1, 8, 8, 2, "x/y"),
        _rec("k2.q3", family(2, "q3"), _Y**2 - 3 * _X**2 + 2, 1, 2, 1, 4, -24, 3, 2, "y/x"),
        _rec("k3.median", family(3), 4 * _X**3 - _Y**3 - 4 * _X + _Y, 1, 1, 1, 2, 24, 4, 3, "y/x"),
        _rec("k3.q1", family(3, "q1"), 8 * _X**3 - 4 * _Y**3 - 8 * _X + 7 * _Y - 3,
             1, 1, f(1, 2), 2, 48, 2, 3, "y/x"),
        _rec("k3.q3", family(3, "q3"), 24 * _X**3 - 4 * _Y**3 - 24 * _X + 7 * _Y + 3,
             1, 1, f(3, 2), 2, 144, 6, 3, "y/x"),
        _rec("k4.median", family(4), _X**4 - 32 * _Y**4 + 32 * _Y**2 - 10 * _X**2 + 9,
             3, 2, 1, 1, 384, 32, 4, "x/y"),
        _rec("k4.q1", family(4, "q1"),
             4 * _X**4 - 16 * _Y**4 - 40 * _X**2 + 88 * _Y**2 - 48 * _Y - 9,
             3, 2, f(3, 2), 2, 1536, 2, 2, "x/y"),
        _rec("k4.q3", family(4, "q3"),
             12 * _X**4 - 16 * _Y**4 - 120 * _X**2 + 88 * _Y**2 + 48 * _Y + 63,
             3, 2, f(5, 2), 2, 4608, f(4, 3), 4, "x/y"),
        _rec("k5.median", family(5), 16 * _X**5 - _Y**5 + 10 * _Y**3 - 80 * _X**3 + 64 * _X - 9 * _Y,
             2, 1, 3, 2, 1920, 16, 5, "y/x"),
        _rec("k6.median", family(6),
             _X**6 - 2 * _Y**6 - 35 * _X**4 + 40 * _Y**4 + 259 * _X**2 - 128 * _Y**2 - 225,
             5, 2, 4, 2, 46080, 2, 6, "x/y"),
        _rec("k6.q3", family(6, "q3"),
             48 * _X**6 - 64 * _Y**6 - 1680 * _X**4 + 1520 * _Y**4 + 960 * _Y**3
             + 12432 * _X**2 - 7756 * _Y**2 - 6000 * _Y - 6075,
             5, 2, f(9, 2), 2, 2211840, f(4, 3), 6, "x/y"),
    ]
    return {r.name: r for r in table}


_CURVES = _build_curve_table()

_U, _V, _W, _J = Poly.var("u"), Poly.var("v"), Poly.var("w"), Poly.var("j")

#: Auxiliary curves used by the quadrature reductions of the order-4 and
#: order-6 medians.  Variables: u is the shifted square of the n-side; j, v,
#: w parametrize the m-side (j integer, w the half-step index).
_STANDALONE = {
    # u^2 = 8(2j-1)^2 + 8, the order-4 quadrature in (u, j)
    "order4-quad-uj": Poly.var("u") ** 2 - 32 * _J**2 + 32 * _J - 16,
    # u^2 = 8 v^2 + 8, same curve without the parity constraint
    "order4-quad-uv": _U**2 - 8 * _V**2 - 8,
    # u^2 = 2(2w-1)^2 + 8, the half-integer branch (provably empty mod 4/8)
    "order4-half-quad": _U**2 - 8 * _W**2 + 8 * _W - 10,
    # cubic surface carrying the order-6 median after u = x^2, v = y^2
    "order6-quad-uv": _U**3 - 2 * _V**3 - 35 * _U**2 + 40 * _V**2 + 259 * _U - 128 * _V - 225,
}


def curve(fam: EquationFamily) -> CurveRecord:
    """The verified plane curve of a family, or NoTabulatedCurve."""
    try:
        return _CURVES[fam.name]
    except KeyError:
        raise NoTabulatedCurve(f"no tabulated curve for family {fam.name}") from None


def curve_names() -> list[str]:
    return list(_CURVES) + list(_STANDALONE)


def curve_by_name(name: str) -> Poly:
    if name in _CURVES:
        return _CURVES[name].poly
    if name in _STANDALONE:
        return _STANDALONE[name]
    raise NoTabulatedCurve(f"unknown curve {name!r}")


def standalone_curves() -> dict[str, Poly]:
    return dict(_STANDALONE)


# -- asymmetric triangle -------------------------------------------------------


def asym_binom(n: Fraction | int, k: int, a: Fraction | int) -> Fraction:
    """Binomial of the triangle whose second diagonal holds a instead of 1:
    C(n,k) + a*C(n-1,k-1)."""
    if k == 0:
        return binom(n, 0)
    return binom(n, k) + Fraction(a) * binom(Fraction(n) - 1, k - 1)


def asym_residual(order: int, n: int, m, a: Fraction | int, b: DyadicInterval) -> DyadicInterval:
    """Certified residual of the asymmetric median relation at floor 2 or 3.

    b must enclose a * 2**(-1/2) (order 2) or a * 2**(-1/3) (order 3); the
    residual splits into an exact rational part plus a linear term in b, so
    the output width is controlled by b's width.
    """
    a = Fraction(a)
    mv = _as_quarter(m)
    if order == 2:
        exact = binom(n + 1, 2) + a * n - 2 * binom(mv, 2) - mv
        return DyadicInterval.point(exact) - b * (2 * (mv - 1) + 1)
    if order == 3:
        exact = binom(n + 1, 3) + a * binom(n, 2) - 2 * binom(mv, 3) - binom(mv, 2)
        return DyadicInterval.point(exact) - b * (2 * binom(mv - 1, 2) + (mv - 1))
    raise ValueError("asymmetric residuals are defined for orders 2 and 3")
