"""Modular admissibility tables for plane curves.

A table enumerates all residue pairs of a curve modulo p (prime or not) and
stores the admissible ones as a bitset; the complement prunes search
candidates.  An empty table is a finite certificate that the curve has no
integer points at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly


@dataclass(frozen=True)
class ResidueTable:
    curve: Poly
    modulus: int
    bits: bytes  # row-major: index x * modulus + y
    admissible_count: int

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.admissible_count, self.modulus * self.modulus)

    def admits(self, x: int, y: int) -> bool:
        p = self.modulus
        return bool(self.bits[(x % p) * p + (y % p)])

    def admissible_pairs(self) -> list[tuple[int, int]]:
        p = self.modulus
        return [(i // p, i % p) for i, b in enumerate(self.bits) if b]

    def x_residues_with_admissible_y(self) -> bytes:
        """Per x-residue flag: does any admissible y exist."""
        p = self.modulus
        return bytes(1 if any(self.bits[x * p + y] for y in range(p)) else 0 for x in range(p))


def _curve_xy_terms(curve: Poly) -> list[tuple[int, int, int]]:
    used = tuple(sorted(curve.used_vars()))  # first axis = alphabetically first
    if len(used) > 2:
        raise ValueError("residue tables support curves in at most two variables")
    xv = used[0] if used else "x"
    yv = used[1] if len(used) > 1 else None
    terms = []
    for exps, c in curve.int_coeff_terms():
        ex = ey = 0
        for v, e in zip(curve.vars, exps):
            if v == xv:
                ex = e
            elif v == yv:
                ey = e
        terms.append((c, ex, ey))
    return terms


def admissible_table(curve: Poly, modulus: int) -> ResidueTable:
    """Exact enumeration of all modulus^2 residue pairs of the curve."""
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    p = modulus
    terms = _curve_xy_terms(curve)
    # power tables: pow_x[v][e] = v^e mod p
    max_ex = max((e for _, e, _ in terms), default=0)
    max_ey = max((e for _, _, e in terms), default=0)
    powx = [[pow(v, e, p) for e in range(max_ex + 1)] for v in range(p)]
    powy = [[pow(v, e, p) for e in range(max_ey + 1)] for v in range(p)]
    bits = bytearray(p * p)
    count = 0
    for x in range(p):
        px = powx[x]
        row = x * p
        for y in range(p):
            py = powy[y]
            acc = 0
            for c, ex, ey in terms:
                acc += c * px[ex] * py[ey]
            if acc % p == 0:
                bits[row + y] = 1
                count += 1
    return ResidueTable(curve, p, bytes(bits), count)


def prune_fraction(table: ResidueTable) -> Fraction:
    """Share of residue pairs the table eliminates."""
    return 1 - table.fraction


def prove_empty(curve: Poly, moduli: list[int]) -> int | None:
    """First modulus whose residue table is empty; a finite certificate that
    the curve has no integer points.  None means no certificate found here.
    """
    for p in moduli:
        if admissible_table(curve, p).admissible_count == 0:
            return p
    return None


def recheck_empty(curve: Poly, modulus: int) -> bool:
    """Independent re-verification of an emptiness certificate by direct
    evaluation over all pairs (no bitset reuse)."""
    used = tuple(sorted(curve.used_vars()))
    for x in range(modulus):
        for y in range(modulus):
            assign = {v: (x if i == 0 else y) for i, v in enumerate(used)}
            if curve.eval(assign) % modulus == 0:
                return False
    return True


def table_json(table: ResidueTable, include_pairs: bool = False) -> dict:
    doc = {
        "curve": table.curve.text(),
        "modulus": table.modulus,
        "admissible_count": table.admissible_count,
        "fraction": str(table.fraction),
        "prune_fraction": str(prune_fraction(table)),
    }
    if include_pairs:
        doc["pairs"] = [list(p) for p in table.admissible_pairs()]
    return doc
