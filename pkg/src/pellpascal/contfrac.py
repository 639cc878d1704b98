"""Certified continued fractions of algebraic roots.

Partial quotients are extracted from a dyadic enclosure of the root: a floor
is emitted only when both interval endpoints agree on it, and the working
precision doubles (starting at 128 bits) until the requested number of
quotients is unambiguous.  Irrationality of the constant guarantees
termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import fixtures
from .exactnum import AlgebraicRoot, refine

DEFAULT_BITS = 128


@dataclass(frozen=True)
class CFExpansion:
    constant: AlgebraicRoot
    quotients: tuple[int, ...]
    certified_bits: int


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    index: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


def _quotients_from_enclosure(lo: Fraction, hi: Fraction, n_terms: int) -> list[int] | None:
    """Common certified prefix of the continued fractions of lo and hi."""
    out = []
    for _ in range(n_terms):
        a_lo = lo.numerator // lo.denominator
        if a_lo != hi.numerator // hi.denominator:
            return None
        out.append(a_lo)
        lo -= a_lo
        hi -= a_lo
        if lo <= 0:  # cannot certify the next floor from this enclosure
            return None
        lo, hi = 1 / hi, 1 / lo
    return out


def expand(root: AlgebraicRoot, n_terms: int) -> CFExpansion:
    """First n_terms certified partial quotients of an irrational root."""
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    if root.is_rational:
        raise ValueError(f"{root} is rational; its continued fraction terminates")
    bits = DEFAULT_BITS
    while True:
        enc = refine(root, bits)
        got = _quotients_from_enclosure(enc.lo, enc.hi, n_terms)
        if got is not None:
            return CFExpansion(root, tuple(got), bits)
        bits *= 2


def convergents(expansion: CFExpansion) -> list[Convergent]:
    out = []
    p0, p1, q0, q1 = 0, 1, 1, 0
    for i, a in enumerate(expansion.quotients):
        p0, p1 = p1, a * p1 + p0
        q0, q1 = q1, a * q1 + q0
        out.append(Convergent(p1, q1, i))
    return out


def is_diophantine(root: AlgebraicRoot, p: int, q: int, start_bits: int = DEFAULT_BITS) -> bool:
    """Decide |root - p/q| < 1/q^2 exactly.

    The enclosure is refined until it lies strictly on one side of each
    bound; rational roots are compared directly.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    target = Fraction(p, q)
    radius = Fraction(1, q * q)
    lo_bound, hi_bound = target - radius, target + radius
    exact = root.rational_value()
    if exact is not None:
        return lo_bound < exact < hi_bound
    bits = start_bits
    while True:
        enc = refine(root, bits)
        if lo_bound < enc.lo and enc.hi < hi_bound:
            return True
        if enc.hi <= lo_bound or hi_bound <= enc.lo:
            return False
        bits *= 2


#: The nine constants of the approximation table, in published order.
TABLE_CONSTANTS: list[tuple[str, AlgebraicRoot]] = [
    ("2^(3/2)", AlgebraicRoot(Fraction(8), 2)),
    ("2^(2/3)", AlgebraicRoot(Fraction(4), 3)),
    ("2^(1/3)", AlgebraicRoot(Fraction(2), 3)),
    ("2^(1/2)", AlgebraicRoot(Fraction(2), 2)),
    ("3^(1/2)", AlgebraicRoot(Fraction(3), 2)),
    ("2^(5/4)", AlgebraicRoot(Fraction(32), 4)),
    ("2^(4/5)", AlgebraicRoot(Fraction(16), 5)),
    ("2^(1/6)", AlgebraicRoot(Fraction(2), 6)),
    ("(4/3)^(1/6)", AlgebraicRoot(Fraction(4, 3), 6)),
]


def table_constant(name: str) -> AlgebraicRoot:
    for key, root in TABLE_CONSTANTS:
        if key == name:
            return root
    raise KeyError(name)


def approximation_table(n_convergents: int = 16) -> dict:
    """Compute convergents for all table constants and diff them against the
    published rows.

    Published rows are subsequences of the convergent list (the tables skip
    intermediate approximants), so matching walks both lists in order; a
    printed entry that is no convergent at all is flagged, with the
    convergent expected at that slot attached, and its Diophantine predicate
    recorded.  The blank row is filled with computed convergents.
    """
    report: dict = {"constants": []}
    for name, root in TABLE_CONSTANTS:
        exp = expand(root, max(n_convergents + 6, 20))
        convs = convergents(exp)[:n_convergents]
        printed = fixtures.PRINTED_CONVERGENTS.get(name)
        rows = []
        flagged = []
        if printed:
            pos = 0
            for p, q in printed:
                hit = None
                for i in range(pos, len(convs)):
                    if convs[i].p == p and convs[i].q == q:
                        hit = i
                        break
                if hit is not None:
                    rows.append({"p": p, "q": q, "match": "yes", "index": hit})
                    pos = hit + 1
                else:
                    expected = convs[pos] if pos < len(convs) else None
                    entry = {
                        "p": p, "q": q, "match": "no",
                        "diophantine": is_diophantine(root, p, q),
                        "expected_p": expected.p if expected else None,
                        "expected_q": expected.q if expected else None,
                    }
                    rows.append(entry)
                    flagged.append(entry)
        status = "printed" if printed else ("blank" if printed == [] else "no-row")
        report["constants"].append({
            "name": name,
            "status": status,
            "quotients": list(exp.quotients[:n_convergents]),
            "convergents": [{"index": c.index, "p": c.p, "q": c.q} for c in convs],
            "printed_entries": rows,
            "flagged": flagged,
        })
    return report


def table_csv(report: dict | None = None) -> str:
    """CSV projection: constant, index, p, q, diophantine, matches_reference."""
    if report is None:
        report = approximation_table()
    lines = ["constant,index,p,q,diophantine,matches_reference"]
    for block in report["constants"]:
        root = table_constant(block["name"])
        printed_ok = {
            (r["p"], r["q"]) for r in block["printed_entries"] if r["match"] == "yes"
        }
        for conv in block["convergents"]:
            p, q = conv["p"], conv["q"]
            if block["status"] == "no-row":
                match = "reference-blank"
            elif block["status"] == "blank":
                match = "reference-blank"
            else:
                match = "yes" if (p, q) in printed_ok else "no"
            dio = is_diophantine(root, p, q)
            lines.append(f"{block['name']},{conv['index']},{p},{q},{dio},{match}")
    return "\n".join(lines) + "\n"
