"""Sieved exhaustive search over the median/quartile families, exact
monotone inversion, quadrature scans, and quasi-solutions from convergents.

Both sides of an equation are kept as integer-valued polynomials on a common
scale (3 * 4^k * k! clears every weight and the quarter grid), so the scan is
pure integer arithmetic: the left side advances by finite differences and a
bracket pointer walks the monotone right side, giving amortized O(1)
inversion per n.  Order-2 families additionally get a vectorized path that
solves the quadratic side exactly with integer square roots.
"""

from __future__ import annotations

import enum
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from math import comb

import numpy as np

from .contfrac import convergents as cf_convergents
from .contfrac import expand as cf_expand
from .exactnum import AlgebraicRoot, QuarterInt, as_perfect_square, ikth_root, isqrt
from .pascal import (
    EquationFamily,
    NoTabulatedCurve,
    Quartile,
    binom,
    curve,
    family,
    residual,
)
from .pell import quadrature_orbit
from .sieve import ResidueTable, admissible_table, prune_fraction


class MedianDomain(enum.Enum):
    """Grid of admissible medians, as a step size in quarter units."""

    INTEGERS = 4
    HALVES = 2
    QUARTERS = 1

    @property
    def step(self) -> int:
        return self.value


def domain_of(name: str | MedianDomain) -> MedianDomain:
    if isinstance(name, MedianDomain):
        return name
    return MedianDomain[name.upper()]


# -- scaled integer sides --------------------------------------------------------


def _mul1(coeffs: list[int], root: int) -> list[int]:
    """Multiply a coefficient list (ascending) by (t + root)."""
    out = [0] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i] += c * root
        out[i + 1] += c
    return out


def scaled_sides(fam: EquationFamily) -> tuple[list[int], list[int]]:
    """Integer polynomials L(n) and R(j) with
    L - R(4m) = 3*4^k*k! * residual(n, m); j counts quarters."""
    k, w = fam.order, fam.weight
    lhs = [1]
    for i in range(k):
        lhs = _mul1(lhs, i)
    scale = 3 * 4**k
    lhs = [scale * c for c in lhs]

    p1 = [1]
    for t in range(-1, k - 1):
        p1 = _mul1(p1, 4 * t)
    p2 = [1]
    for t in range(0, k - 1):
        p2 = _mul1(p2, 4 * t)
    w3 = 3 * w
    assert w3.denominator == 1
    w3 = w3.numerator
    rhs = [w3 * c for c in p1]
    for i, c in enumerate(p2):
        rhs[i] += 12 * k * c
    return lhs, rhs


def _poly_eval(coeffs: list[int], t: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def _fd_block(coeffs: list[int], start: int, step: int, count: int) -> list[int]:
    """Values coeffs(start + step*i) for i < count via finite differences;
    the k accumulate passes run at C speed."""
    if count <= 0:
        return []
    k = len(coeffs) - 1
    pts = [_poly_eval(coeffs, start + step * i) for i in range(k + 1)]
    levels = [pts[0]]
    cur = pts
    for _ in range(k):
        cur = [cur[i + 1] - cur[i] for i in range(len(cur) - 1)]
        levels.append(cur[0])
    series = [levels[k]] * count
    for lvl in range(k - 1, -1, -1):
        series = list(accumulate([levels[lvl]] + series[: count - 1]))
    return series


class _GridSide:
    """Growing window of scaled right-side values over the quarter grid."""

    BLOCK = 1 << 14

    def __init__(self, coeffs: list[int], j_start: int, step: int):
        self.coeffs = coeffs
        self.step = step
        self.base_j = j_start
        self.next_j = j_start
        self.vals: list[int] = []

    def _extend(self):
        self.vals.extend(_fd_block(self.coeffs, self.next_j, self.step, self.BLOCK))
        self.next_j += self.step * self.BLOCK

    def cover_bound(self, bound: int) -> None:
        """Extend until the last cached value exceeds bound (side is
        strictly increasing on the grid)."""
        while not self.vals or self.vals[-1] <= bound:
            self._extend()

    def j_of(self, idx: int) -> int:
        return self.base_j + self.step * idx

    def drop(self, count: int) -> None:
        del self.vals[:count]
        self.base_j += self.step * count


# -- sieve runtime -----------------------------------------------------------------


@dataclass(frozen=True)
class _SieveRT:
    modulus: int
    bits: bytes
    x_cycle: tuple[int, ...]  # x residue indexed by n mod p
    cy: int                   # y = (cy*j + dy4) / 4
    dy4: int
    x_any: bytes              # per x-residue: any admissible y at all
    prefilter_ok: bool        # every grid j yields an integral y


def _build_sieve_rts(fam: EquationFamily, domain: MedianDomain, moduli) -> list[_SieveRT]:
    try:
        rec = curve(fam)
    except NoTabulatedCurve:
        return []
    out = []
    ex, ey = rec.sub.entry("x"), rec.sub.entry("y")
    ax, bx = int(ex.slope), int(ex.offset)
    cy = int(ey.slope)
    dy4 = int(4 * ey.offset)
    grid_residues = range(0, 4, domain.step) if domain.step < 4 else (0,)
    prefilter_ok = all((cy * jr + dy4) % 4 == 0 for jr in grid_residues)
    for p in moduli:
        table = admissible_table(rec.poly, p)
        out.append(_SieveRT(
            modulus=p,
            bits=table.bits,
            x_cycle=tuple((ax * v + bx) % p for v in range(p)),
            cy=cy,
            dy4=dy4,
            x_any=table.x_residues_with_admissible_y(),
            prefilter_ok=prefilter_ok,
        ))
    return out


def auto_sieve_moduli(fam: EquationFamily, candidates=(3, 4, 5, 7, 8, 9, 11, 13, 16)) -> tuple[int, ...]:
    """Deterministic selection: the two candidate moduli with the largest
    prune fraction, keeping only those that prune at least a quarter."""
    try:
        rec = curve(fam)
    except NoTabulatedCurve:
        return ()
    scored = []
    for p in candidates:
        t = admissible_table(rec.poly, p)
        pr = prune_fraction(t)
        if pr >= Fraction(1, 4):
            scored.append((-pr, p))
    scored.sort()
    return tuple(sorted(p for _, p in scored[:2]))


# -- range scans ----------------------------------------------------------------------


def _scan_incremental(fam, lo, hi, domain, rts, sample_mod):
    lhs, rhs = scaled_sides(fam)
    side = _GridSide(rhs, 4, domain.step)
    tabs = [(s.modulus, s.bits, s.x_cycle, s.cy, s.dy4) for s in rts]
    ptr = 0
    solutions, subtrivial, sample = [], [], []
    tested = pruned = 0
    n = lo
    chunk = 1 << 15
    while n <= hi:
        cnt = min(chunk, hi - n + 1)
        lvals = _fd_block(lhs, n, 1, cnt)
        side.cover_bound(lvals[-1])
        vals = side.vals
        for i in range(cnt):
            lv = lvals[i]
            while vals[ptr + 1] <= lv:
                ptr += 1
            tested += 1
            j = side.j_of(ptr)
            killed = False
            for p, bits, x_cycle, cy, dy4 in tabs:
                t = cy * j + dy4
                if t & 3:
                    continue  # y not integral here; the table is silent
                if not bits[x_cycle[(n + i) % p] * p + (t >> 2) % p]:
                    killed = True
                    break
            if killed:
                pruned += 1
                if sample_mod and pruned % sample_mod == 0 and len(sample) < 64:
                    sample.append((n + i, j))
                continue
            if vals[ptr] == lv:
                (solutions if j >= 8 else subtrivial).append((n + i, j))
        n += cnt
        if ptr:
            side.drop(ptr)
            vals = side.vals
            ptr = 0
    return {"solutions": solutions, "subtrivial": subtrivial,
            "tested": tested, "pruned": pruned, "sample": sample}


_SQ64_NP = np.zeros(64, dtype=bool)
_SQ64_NP[list({(i * i) & 63 for i in range(64)})] = True
_SQ63_NP = np.zeros(63, dtype=bool)
_SQ63_NP[list({(i * i) % 63 for i in range(63)})] = True
_SQ65_NP = np.zeros(65, dtype=bool)
_SQ65_NP[list({(i * i) % 65 for i in range(65)})] = True


def _fast2_limit(quartile: Quartile) -> int:
    # int64 safety bounds for the discriminant formulas below
    return {"median": 10**9, "q3": 8 * 10**8, "q1": 10**15}[quartile.value]


def _scan_fast_order2(fam, lo, hi, domain, rts, sample_mod):
    """Vectorized order-2 scan; the quadratic right side inverts by integer
    square root.  numpy int64 is exact within the guarded range and every
    candidate is re-verified in arbitrary precision."""
    step = domain.step
    q = fam.quartile
    solutions, subtrivial, sample = [], [], []
    tested = pruned = 0

    if q is Quartile.Q1:
        # right side collapses: scaled equation forces j = 2n + 2 exactly
        for n in range(lo, hi + 1):
            tested += 1
            j = 2 * n + 2
            if j % step == 0:
                (solutions if j >= 8 else subtrivial).append((n, j))
        return {"solutions": solutions, "subtrivial": subtrivial,
                "tested": tested, "pruned": pruned, "sample": sample}

    prefilters = []
    for s in rts:
        if s.prefilter_ok:
            lut = np.array([s.x_any[s.x_cycle[v]] for v in range(s.modulus)], dtype=bool)
            prefilters.append((s.modulus, lut))

    chunk = 1 << 20
    n0 = lo
    while n0 <= hi:
        cnt = min(chunk, hi - n0 + 1)
        n = np.arange(n0, n0 + cnt, dtype=np.int64)
        tested += cnt
        if q is Quartile.MEDIAN:
            t = 8 * n * (n + 1)
        else:  # Q3
            t = 12 * n * (n + 1) + 1
        alive = np.ones(cnt, dtype=bool)
        for p, lut in prefilters:
            alive &= lut[(n % p).astype(np.int64)]
        killed = cnt - int(alive.sum())
        pruned += killed
        if sample_mod and killed:
            dead = n[~alive]
            take = dead[:: max(1, len(dead) // 4)][:4]
            for nd in take:
                if len(sample) < 64:
                    sample.append((int(nd), None))
        mask = alive & _SQ64_NP[t & 63] & _SQ63_NP[t % 63] & _SQ65_NP[t % 65]
        for idx in np.nonzero(mask)[0]:
            nv = int(n[idx])
            tv = 8 * nv * (nv + 1) if q is Quartile.MEDIAN else 12 * nv * (nv + 1) + 1
            s = isqrt(tv)
            if s * s != tv:
                continue
            j = s if q is Quartile.MEDIAN else s - 1
            if j % step:
                continue
            (solutions if j >= 8 else subtrivial).append((nv, j))
        n0 += cnt
    return {"solutions": solutions, "subtrivial": subtrivial,
            "tested": tested, "pruned": pruned, "sample": sample}


def partition(n_max: int, chunk: int) -> list[tuple[int, int]]:
    """Covering, disjoint, ordered n-ranges starting at 2."""
    if chunk < 1:
        raise ValueError("chunk must be >= 1")
    return [(lo, min(lo + chunk - 1, n_max)) for lo in range(2, n_max + 1, chunk)]


def _run_task(args):
    order, quartile, domain_name, lo, hi, moduli, sample_mod, allow_fast = args
    fam = family(order, quartile)
    domain = MedianDomain[domain_name]
    rts = _build_sieve_rts(fam, domain, moduli)
    if allow_fast and order == 2 and hi <= _fast2_limit(fam.quartile):
        return _scan_fast_order2(fam, lo, hi, domain, rts, sample_mod)
    return _scan_incremental(fam, lo, hi, domain, rts, sample_mod)


# -- the public search -------------------------------------------------------------


@dataclass
class SearchReport:
    family: EquationFamily
    domain: MedianDomain
    n_max: int
    solutions: list[tuple[int, QuarterInt]]
    trivial_excluded: list[tuple[int, QuarterInt]]
    candidates_tested: int
    candidates_pruned: int
    sieve_moduli: tuple[int, ...]
    seconds: float
    pruned_sample: list = field(default_factory=list)

    def solution_pairs(self) -> list[tuple[int, Fraction]]:
        return [(n, m.value) for n, m in self.solutions]


def _trivial_scan(fam: EquationFamily, domain: MedianDomain) -> list[tuple[int, QuarterInt]]:
    out = []
    for n in (0, 1):
        for j in range(0, 9, domain.step):
            if residual(fam, n, Fraction(j, 4)) == 0:
                out.append((n, QuarterInt(j)))
    return out


def exhaustive(
    fam: EquationFamily,
    n_max: int,
    domain: MedianDomain = MedianDomain.QUARTERS,
    sieves="auto",
    workers: int = 1,
    chunk: int = 1 << 16,
    sample_mod: int = 97,
    allow_fast: bool = True,
) -> SearchReport:
    """Scan n = 2..n_max for exact solutions with m on the domain grid.

    sieves: "auto" (deterministic per-family selection), None, a sequence of
    moduli, or prebuilt ResidueTable objects (their moduli are reused with
    the family's own curve).  Every reported solution is re-verified through
    the exact rational residual before the report is returned.
    """
    start = time.perf_counter()
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    if sieves == "auto":
        moduli = auto_sieve_moduli(fam)
    elif not sieves:
        moduli = ()
    elif all(isinstance(s, ResidueTable) for s in sieves):
        moduli = tuple(s.modulus for s in sieves)
    else:
        moduli = tuple(int(s) for s in sieves)

    tasks = [
        (fam.order, fam.quartile.value, domain.name, lo, hi, moduli, sample_mod, allow_fast)
        for lo, hi in partition(n_max, chunk)
    ]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_run_task, tasks))
    else:
        partials = [_run_task(t) for t in tasks]

    solutions: list[tuple[int, QuarterInt]] = []
    trivial = _trivial_scan(fam, domain)
    tested = pruned = 0
    sample: list = []
    for part in partials:
        solutions.extend((n, QuarterInt(j)) for n, j in part["solutions"])
        trivial.extend((n, QuarterInt(j)) for n, j in part["subtrivial"])
        tested += part["tested"]
        pruned += part["pruned"]
        sample.extend(part["sample"])

    solutions.sort()
    for n, m in solutions:
        assert residual(fam, n, m) == 0, (n, m)
    return SearchReport(
        family=fam, domain=domain, n_max=n_max,
        solutions=solutions, trivial_excluded=trivial,
        candidates_tested=tested, candidates_pruned=pruned,
        sieve_moduli=moduli, seconds=time.perf_counter() - start,
        pruned_sample=sample[:64],
    )


def verify_pruned_sample(report: SearchReport) -> bool:
    """Re-verify that sampled pruned candidates really are non-solutions."""
    for entry in report.pruned_sample:
        n, j = entry
        if j is None:
            if invert_m(report.family, n, report.domain) is not None:
                return False
        elif residual(report.family, n, Fraction(j, 4)) == 0:
            return False
    return True


def invert_m(fam: EquationFamily, n: int, domain: MedianDomain = MedianDomain.QUARTERS) -> QuarterInt | None:
    """The unique m >= 1 on the domain grid with residual(n, m) = 0, if any.

    Binary search on the strictly increasing scaled right side; replaces the
    closed radical inversions."""
    if n < 1:
        raise ValueError("n must be >= 1")
    lhs, rhs = scaled_sides(fam)
    target = _poly_eval(lhs, n)
    step = domain.step
    lo_i, hi_i = 0, 8
    while _poly_eval(rhs, 4 + step * hi_i) <= target:
        hi_i *= 2
    while lo_i < hi_i:
        mid = (lo_i + hi_i + 1) // 2
        if _poly_eval(rhs, 4 + step * mid) <= target:
            lo_i = mid
        else:
            hi_i = mid - 1
    j = 4 + step * lo_i
    return QuarterInt(j) if _poly_eval(rhs, j) == target else None


def exhaustive_oracle(fam: EquationFamily, n_max: int, domain: MedianDomain) -> dict:
    """Independent brute-force oracle: both sides evaluated directly from
    the rational binomial definition over the whole (n, m) grid."""
    k, w = fam.order, fam.weight
    lmax = comb(n_max + k - 1, k)
    mside: dict[Fraction, list[int]] = {}
    j = 0
    while True:
        mv = Fraction(j, 4)
        val = w * binom(mv + k - 2, k) + binom(mv + k - 2, k - 1)
        mside.setdefault(val, []).append(j)
        if j >= 8 and val > lmax:
            break
        j += domain.step
    solutions, trivial = [], []
    for n in range(0, n_max + 1):
        lv = Fraction(comb(n + k - 1, k))
        for jj in mside.get(lv, ()):
            if n >= 2 and jj >= 8:
                solutions.append((n, jj))
            else:
                trivial.append((n, jj))
    return {"solutions": solutions, "trivial": trivial}


# -- quadrature ------------------------------------------------------------------------


def quadrature_scan_order4(limit: int) -> dict:
    """Walk the quadrature orbit u^2 = 8(2j-1)^2 + 8 up to u <= limit and
    test the square side conditions: u+5 an odd square (recovering the
    n-side) and j a perfect square (recovering an integer m)."""
    hits = []
    scanned = 0
    # generate enough orbit terms: u grows by a factor ~5.83 per step
    count = 4
    while True:
        orbit = quadrature_orbit(count)
        if orbit[-1][0] > limit:
            break
        count += 4
    for u, w in orbit:
        if u > limit:
            break
        scanned += 1
        j = (w + 1) // 2
        s = as_perfect_square(u + 5)
        t = as_perfect_square(j)
        if s is None or t is None:
            continue
        if s % 2 == 0:
            continue
        n = (s - 3) // 2
        m = t - 1
        hits.append({"u": u, "j": j, "n": n, "m": m, "trivial": n < 2 or m < 2})
    return {"limit": limit, "terms_scanned": scanned, "hits": hits}


_H_COEFFS = [-225, 259, -35, 1]  # ascending: u^3 - 35u^2 + 259u - 225
_G_COEFFS = [0, 128, -40, 2]     # 2v^3 - 40v^2 + 128v


def quadrature_scan_order6(limit: int) -> dict:
    """All integer points (u, v) with u <= limit on the cubic surface of the
    order-6 median, then the quadrature filter u = (2n+5)^2, v = (2m+4)^2.

    The monotone branch (u >= 31, v >= 14) is scanned with an incremental
    bracket; the small non-monotone region is enumerated directly.
    """
    points = []
    for u in range(0, min(limit, 30) + 1):
        hu = _poly_eval(_H_COEFFS, u)
        for v in range(0, 41):
            if _poly_eval(_G_COEFFS, v) == hu:
                points.append((u, v))
    if limit >= 31:
        side = _GridSide(_G_COEFFS, 14, 1)
        ptr = 0
        n0 = 31
        chunk = 1 << 15
        while n0 <= limit:
            cnt = min(chunk, limit - n0 + 1)
            hvals = _fd_block(_H_COEFFS, n0, 1, cnt)
            side.cover_bound(hvals[-1])
            vals = side.vals
            for i in range(cnt):
                hv = hvals[i]
                while vals[ptr + 1] <= hv:
                    ptr += 1
                if vals[ptr] == hv:
                    points.append((n0 + i, side.j_of(ptr)))
            n0 += cnt
            if ptr:
                side.drop(ptr)
                vals = side.vals
                ptr = 0
    hits, rejected = [], []
    for u, v in points:
        x = as_perfect_square(u)
        y = as_perfect_square(v)
        ok = (
            x is not None and y is not None
            and x % 2 == 1 and y % 2 == 0
            and x >= 7 and y >= 6
        )
        if ok:
            hits.append({"u": u, "v": v, "n": (x - 5) // 2, "m": (y - 4) // 2})
        else:
            rejected.append((u, v))
    half_hits = [
        (u, v) for u, v in points
        if (x := as_perfect_square(u)) is not None and x % 2 == 1 and x >= 7
        and (y := as_perfect_square(v)) is not None and y % 2 == 1 and y >= 7
    ]
    return {
        "limit": limit,
        "integer_points": points,
        "hits": hits,
        "half_integer_hits": half_hits,
        "rejected_points": rejected,
    }


# -- quasi-solutions ----------------------------------------------------------------


@dataclass(frozen=True)
class QuasiSolution:
    index: int
    p: int
    q: int
    n: int
    m: QuarterInt
    n_exact: Fraction
    m_exact: Fraction
    on_grid: bool
    residual: Fraction
    order_ratio: Fraction


def _round_to(value: Fraction, denominator: int) -> Fraction:
    scaled = value * denominator
    nearest = (2 * scaled.numerator + scaled.denominator) // (2 * scaled.denominator)
    return Fraction(nearest, denominator)


_F = Fraction

#: (constant, (p, q) -> (n_exact, m_exact), m grid denominator) per track.
#: The denominator states which m-class the track aims at (1: integers,
#: 2: halves, 4: quarters); convergents landing off that class are rounded
#: onto it and flagged.
_QUASI_TRACKS: dict[tuple[str, str], tuple[AlgebraicRoot, object, int]] = {
    ("k2.median", "integer"): (AlgebraicRoot(_F(8), 2), lambda p, q: (_F(p - 1, 2), _F(q)), 1),
    ("k2.q3", "half"): (AlgebraicRoot(_F(3), 2), lambda p, q: (_F(q - 1, 2), _F(p - 1, 4)), 4),
    ("k3.median", "integer"): (AlgebraicRoot(_F(4), 3), lambda p, q: (_F(q - 1), _F(p - 1, 2)), 1),
    ("k3.median", "half"): (AlgebraicRoot(_F(2), 3), lambda p, q: (_F(p - 1), _F(2 * q - 1, 2)), 2),
    ("k3.q1", "quarter"): (AlgebraicRoot(_F(2), 3), lambda p, q: (_F(q - 1), _F(2 * p - 1, 4)), 4),
    ("k3.q3", "quarter"): (AlgebraicRoot(_F(6), 3), lambda p, q: (_F(q - 1), _F(2 * p - 3, 4)), 4),
    ("k4.median", "integer"): (AlgebraicRoot(_F(32), 4), lambda p, q: (_F(p - 3, 2), _F(q - 1)), 1),
    ("k4.q1", "quarter"): (AlgebraicRoot(_F(2), 2), lambda p, q: (_F(p - 3, 2), _F(2 * q - 3, 4)), 4),
    ("k4.q3", "quarter"): (AlgebraicRoot(_F(4, 3), 4), lambda p, q: (_F(p - 3, 2), _F(2 * q - 5, 4)), 4),
    ("k5.median", "integer"): (AlgebraicRoot(_F(16), 5), lambda p, q: (_F(q - 2), _F(p - 3, 2)), 1),
    ("k6.median", "integer"): (AlgebraicRoot(_F(2), 6), lambda p, q: (_F(p - 5, 2), _F(q - 4, 2)), 1),
    ("k6.q3", "quarter"): (AlgebraicRoot(_F(4, 3), 6), lambda p, q: (_F(p - 5, 2), _F(2 * q - 9, 4)), 4),
}


def quasi_tracks(fam: EquationFamily) -> list[str]:
    return [t for (name, t) in _QUASI_TRACKS if name == fam.name]


def quasi_generate(fam: EquationFamily, count: int, track: str | None = None) -> list[QuasiSolution]:
    """Quasi-solutions: convergents of the family's constant pulled back
    through the curve substitution, rounded to the quarter grid when a
    parity condition fails, with the exact residual and its order ratio
    |residual| / n^(k-2) attached."""
    if count < 1:
        raise ValueError("count must be >= 1")
    tracks = quasi_tracks(fam)
    if not tracks:
        raise NoTabulatedCurve(f"no quasi-solution track for family {fam.name}")
    if track is None:
        track = tracks[0]
    if (fam.name, track) not in _QUASI_TRACKS:
        raise KeyError(f"unknown track {track!r} for {fam.name}; have {tracks}")
    root, to_nm, m_den = _QUASI_TRACKS[(fam.name, track)]
    k = fam.order
    out: list[QuasiSolution] = []
    terms = max(2 * count + 8, 16)
    while True:
        convs = cf_convergents(cf_expand(root, terms))
        out.clear()
        for c in convs:
            n_exact, m_exact = to_nm(c.p, c.q)
            n_r = _round_to(n_exact, 1)
            m_r = _round_to(m_exact, m_den)
            if n_r < 2:
                continue
            n_i = int(n_r)
            m_q = QuarterInt(int(m_r * 4))
            res = residual(fam, n_i, m_q)
            ratio = abs(res) if k == 2 else abs(res) / Fraction(n_i) ** (k - 2)
            out.append(QuasiSolution(
                index=c.index, p=c.p, q=c.q, n=n_i, m=m_q,
                n_exact=n_exact, m_exact=m_exact,
                on_grid=(n_exact == n_r and m_exact == m_r),
                residual=res, order_ratio=ratio,
            ))
            if len(out) >= count:
                return out
        if len(out) >= count:
            return out
        terms *= 2


# -- serialization ------------------------------------------------------------------


def report_json(report: SearchReport) -> dict:
    return {
        "schema": "pellpascal/search-report/v1",
        "family": report.family.name,
        "quartile": report.family.quartile.value,
        "order": report.family.order,
        "n_max": str(report.n_max),
        "domain": report.domain.name.lower(),
        "sieve_moduli": list(report.sieve_moduli),
        "solutions": [{"n": str(n), "m_quarters": str(m.quarters)} for n, m in report.solutions],
        "trivial": [{"n": str(n), "m_quarters": str(m.quarters)} for n, m in report.trivial_excluded],
        "tested": str(report.candidates_tested),
        "pruned": str(report.candidates_pruned),
        "seconds": report.seconds,
    }
