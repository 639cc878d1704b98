"""Sparse multivariate polynomials with exact rational coefficients.

Small degrees only (the plane curves here are degree <= 6), so the
representation favours clarity: a variable tuple plus a dict mapping
exponent tuples to Fraction coefficients, kept in canonical trimmed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


class Poly:
    __slots__ = ("vars", "terms")

    def __init__(self, variables: tuple[str, ...], terms: dict[tuple[int, ...], Fraction]):
        self.vars = tuple(variables)
        self.terms = {e: Fraction(c) for e, c in terms.items() if c != 0}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def var(name: str) -> "Poly":
        return Poly((name,), {(1,): Fraction(1)})

    @staticmethod
    def const(c) -> "Poly":
        c = Fraction(c)
        return Poly((), {(): c} if c else {})

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.const(other)

    # -- variable alignment ------------------------------------------------

    def _on_vars(self, variables: tuple[str, ...]) -> dict[tuple[int, ...], Fraction]:
        if variables == self.vars:
            return dict(self.terms)
        pos = {v: i for i, v in enumerate(variables)}
        idx = [pos[v] for v in self.vars]
        out: dict[tuple[int, ...], Fraction] = {}
        n = len(variables)
        for exps, c in self.terms.items():
            key = [0] * n
            for i, e in zip(idx, exps):
                key[i] = e
            k = tuple(key)
            out[k] = out.get(k, Fraction(0)) + c
        return out

    def _joint(self, other: "Poly") -> tuple[tuple[str, ...], dict, dict]:
        if self.vars == other.vars:
            return self.vars, dict(self.terms), dict(other.terms)
        joint = tuple(dict.fromkeys(self.vars + other.vars))
        return joint, self._on_vars(joint), other._on_vars(joint)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        o = Poly._coerce(other)
        joint, a, b = self._joint(o)
        for e, c in b.items():
            a[e] = a.get(e, Fraction(0)) + c
        return Poly(joint, a)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly._coerce(other))

    def __rsub__(self, other):
        return Poly._coerce(other) + (-self)

    def __mul__(self, other):
        o = Poly._coerce(other)
        joint, a, b = self._joint(o)
        out: dict[tuple[int, ...], Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb)) if joint else ()
                c = ca * cb
                if c:
                    out[key] = out.get(key, Fraction(0)) + c
        return Poly(joint, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial powers not supported")
        out = Poly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, (Poly, int, Fraction)):
            return NotImplemented
        return (self - other).is_zero

    def __hash__(self):
        joint = tuple(sorted(self.vars))
        items = tuple(sorted(self._on_vars(joint).items()))
        return hash((joint, items))

    # -- queries -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def used_vars(self) -> tuple[str, ...]:
        used = set()
        for exps in self.terms:
            for v, e in zip(self.vars, exps):
                if e:
                    used.add(v)
        return tuple(v for v in self.vars if v in used)

    def coefficient_items(self):
        """Iterate (exponent tuple, coefficient) pairs (canonical order)."""
        return sorted(self.terms.items(), key=lambda kv: self._term_key(kv[0]))

    # -- substitution / evaluation -------------------------------------------

    def subs(self, mapping: dict[str, "Poly | Fraction | int"]) -> "Poly":
        """Substitute polynomials (or constants) for a subset of variables."""
        polys = {v: Poly._coerce(p) for v, p in mapping.items()}
        out = Poly.const(0)
        for exps, c in self.terms.items():
            term = Poly.const(c)
            for v, e in zip(self.vars, exps):
                if e == 0:
                    continue
                term = term * (polys[v] ** e if v in polys else Poly.var(v) ** e)
            out = out + term
        return out

    def eval(self, assign: dict[str, Fraction | int]) -> Fraction:
        total = Fraction(0)
        for exps, c in self.terms.items():
            val = c
            for v, e in zip(self.vars, exps):
                if e:
                    val *= Fraction(assign[v]) ** e
            total += val
        return total

    def int_coeff_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms with integer coefficients; raises if any are fractional."""
        out = []
        for exps, c in self.terms.items():
            if c.denominator != 1:
                raise ValueError("polynomial has non-integer coefficients")
            out.append((exps, c.numerator))
        return out

    def primitive(self) -> tuple["Poly", Fraction]:
        """(p, s) with p = s * self, p having integer coefficients, content 1.

        The leading canonical coefficient of p is made positive.  Zero maps
        to (0, 1).
        """
        if self.is_zero:
            return self, Fraction(1)
        den = 1
        for c in self.terms.values():
            den = den * c.denominator // gcd(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = gcd(num, (c * den).numerator)
        s = Fraction(den, num)
        lead = self.terms[min(self.terms, key=self._term_key)]
        if lead < 0:
            s = -s
        return Poly(self.vars, {e: c * s for e, c in self.terms.items()}), s

    # -- presentation ----------------------------------------------------------

    def _term_key(self, exps: tuple[int, ...]):
        return (-sum(exps), tuple(-e for e in exps))

    def text(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exps, c in self.coefficient_items():
            factors = []
            for v, e in zip(self.vars, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = str(mag) + "*" + "*".join(factors)
            parts.append(("- " if c < 0 else "+ ") + body)
        first = parts[0]
        first = "-" + first[2:] if first.startswith("- ") else first[2:]
        return " ".join([first] + parts[1:])

    def __repr__(self):
        return f"Poly({self.text()})"


@dataclass(frozen=True)
class AffineEntry:
    target: str
    offset: Fraction
    slope: Fraction
    source: str

    def __post_init__(self):
        object.__setattr__(self, "offset", Fraction(self.offset))
        object.__setattr__(self, "slope", Fraction(self.slope))
        if self.slope == 0:
            raise ValueError("affine substitution must be invertible")

    def to_poly(self) -> Poly:
        return Poly.const(self.offset) + Poly.const(self.slope) * Poly.var(self.source)

    def invert(self, value: Fraction) -> Fraction:
        return (Fraction(value) - self.offset) / self.slope

    def __str__(self):
        off = self.offset
        if off == 0:
            tail = ""
        else:
            tail = f" + {off}" if off > 0 else f" - {-off}"
        head = self.source if self.slope == 1 else f"{self.slope}*{self.source}"
        return f"{self.target} -> {head}{tail}"


@dataclass(frozen=True)
class AffineSub:
    """Invertible affine change of variables, e.g. x -> 2n+1, y -> m."""

    entries: tuple[AffineEntry, ...]

    @staticmethod
    def of(*specs: tuple[str, Fraction | int, Fraction | int, str]) -> "AffineSub":
        return AffineSub(tuple(AffineEntry(t, Fraction(c0), Fraction(c1), s) for t, c0, c1, s in specs))

    def mapping(self) -> dict[str, Poly]:
        return {e.target: e.to_poly() for e in self.entries}

    def apply(self, p: Poly) -> Poly:
        return p.subs(self.mapping())

    def entry(self, target: str) -> AffineEntry:
        for e in self.entries:
            if e.target == target:
                return e
        raise KeyError(target)

    def __str__(self):
        return ", ".join(str(e) for e in self.entries)


def check_identity(lhs: Poly, rhs: Poly, sub: "AffineSub | dict | None" = None):
    """Expand both sides under the substitution and compare exactly.

    Returns the difference polynomial (zero means the identity holds); this
    is the mechanism that turns a misprinted formula into a machine-readable
    erratum.
    """
    if sub is None:
        mapping = {}
    elif isinstance(sub, AffineSub):
        mapping = sub.mapping()
    else:
        mapping = sub
    return lhs.subs(mapping) - rhs.subs(mapping)
