"""Classical Pell machinery: periodic continued fraction of sqrt(D),
fundamental units, particular-solution classes, and integer-recurrence
generation of the published solution sequences.

Sequences are generated by the exact recurrence
(x, y) <- (x1*x + D*y1*y, x1*y + y1*x); the printed surd closed forms are
demoted to certified-interval cross checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import fixtures
from .exactnum import AlgebraicRoot, DyadicInterval, as_perfect_square, isqrt, refine


@dataclass(frozen=True)
class SqrtCF:
    """Continued fraction of sqrt(D): [a0; period repeating]."""

    d: int
    a0: int
    period: tuple[int, ...]

    def quotients(self, count: int) -> list[int]:
        out = [self.a0]
        while len(out) < count:
            out.extend(self.period)
        return out[:count]

    def convergents(self, count: int) -> list[tuple[int, int]]:
        ps, qs = [], []
        p0, p1, q0, q1 = 0, 1, 1, 0
        for a in self.quotients(count):
            p0, p1 = p1, a * p1 + p0
            q0, q1 = q1, a * q1 + q0
            ps.append(p1)
            qs.append(q1)
        return list(zip(ps, qs))


def sqrt_cf(d: int) -> SqrtCF:
    """Exact period of sqrt(d) via the standard (P, Q) integer recurrence."""
    if d <= 0:
        raise ValueError("d must be positive")
    a0 = isqrt(d)
    if a0 * a0 == d:
        raise ValueError(f"{d} is a perfect square")
    period = []
    p, q = a0, 1
    first = None
    while True:
        q = (d - p * p) // q
        a = (a0 + p) // q
        state = (p, q)
        if first is None:
            first = state
        elif state == first:
            break
        period.append(a)
        p = a * q - p
    return SqrtCF(d, a0, tuple(period))


@dataclass(frozen=True)
class PellFundamental:
    d: int
    plus_one: tuple[int, int]
    minus_one: tuple[int, int] | None

    @property
    def minus_one_solvable(self) -> bool:
        return self.minus_one is not None


def fundamental_unit(d: int) -> PellFundamental:
    """Least positive solution of x^2 - d y^2 = 1, plus the -1 solution
    when the period of sqrt(d) is odd."""
    cf = sqrt_cf(d)
    length = len(cf.period)
    h, k = cf.convergents(length)[-1]
    if length % 2 == 0:
        assert h * h - d * k * k == 1
        return PellFundamental(d, (h, k), None)
    assert h * h - d * k * k == -1
    return PellFundamental(d, (h * h + d * k * k, 2 * h * k), (h, k))


@dataclass(frozen=True)
class PellProblem:
    d: int
    c: int

    def __post_init__(self):
        if self.d <= 0 or isqrt(self.d) ** 2 == self.d:
            raise ValueError("d must be a positive nonsquare")
        if self.c == 0:
            raise ValueError("c must be nonzero")

    def holds(self, x: int, y: int) -> bool:
        return x * x - self.d * y * y == self.c


@dataclass(frozen=True)
class PellClassSeq:
    """A particular solution plus the unit that steps along its class."""

    problem: PellProblem
    seed: tuple[int, int]
    unit: tuple[int, int]

    def __post_init__(self):
        x, y = self.seed
        if not self.problem.holds(x, y):
            raise ValueError("seed does not solve the problem")
        x1, y1 = self.unit
        if x1 * x1 - self.problem.d * y1 * y1 != 1:
            raise ValueError("unit does not solve the +1 equation")

    def step(self, x: int, y: int) -> tuple[int, int]:
        x1, y1 = self.unit
        return x1 * x + self.problem.d * y1 * y, x1 * y + y1 * x


def generate(seq: PellClassSeq, count: int) -> list[tuple[int, int]]:
    """The seed plus successive unit images; every term is re-verified."""
    if count < 0:
        raise ValueError("count must be >= 0")
    out = []
    x, y = seq.seed
    for _ in range(count):
        assert seq.problem.holds(x, y), (x, y)
        out.append((x, y))
        x, y = seq.step(x, y)
    return out


def _unit_power(d: int, base: tuple[int, int], e: int) -> tuple[int, int]:
    x, y = 1, 0
    bx, by = base
    for _ in range(e):
        x, y = bx * x + d * by * y, bx * y + by * x
    return x, y


def class_sequences(
    problem: PellProblem,
    seed_bound: int,
    unit: tuple[int, int] | None = None,
    merge_conjugates: bool = True,
    y_filter=None,
) -> list[PellClassSeq]:
    """All solution classes with a seed in 0 <= y <= seed_bound, x >= 0.

    Seeds are deduplicated under the unit action; with merge_conjugates the
    sign-conjugate orbit is folded into the same class.  y_filter optionally
    restricts the admissible y values (e.g. parity constraints).  An empty
    result means nothing below the bound, never a proof of emptiness.
    """
    if seed_bound < 1:
        raise ValueError("seed_bound must be >= 1")
    d, c = problem.d, problem.c
    if unit is None:
        unit = fundamental_unit(d).plus_one
    x1, y1 = unit

    found: list[tuple[int, int]] = []
    for y in range(0, seed_bound + 1):
        if y_filter is not None and not y_filter(y):
            continue
        t = c + d * y * y
        if t < 0:
            continue
        x = as_perfect_square(t)
        if x is not None:
            found.append((x, y))
    present = set(found)

    xcap = isqrt(abs(c) + d * seed_bound * seed_bound) + 1

    def walk(x: int, y: int, claimed: set):
        # march the unit action, marking enumerated representatives
        for _ in range(512):
            if abs(y) > seed_bound and abs(x) > xcap:
                break
            key = (abs(x), abs(y))
            if key in present:
                claimed.add(key)
            x, y = x1 * x + d * y1 * y, x1 * y + y1 * x

    classes = []
    claimed_all: set = set()
    for x, y in sorted(found, key=lambda t: (t[1], t[0])):
        if (x, y) in claimed_all:
            continue
        claimed: set = set()
        walk(x, y, claimed)
        if merge_conjugates:
            walk(x, -y, claimed)
        claimed_all |= claimed
        members = sorted(claimed, key=lambda t: (t[1], t[0]))
        positive = [m for m in members if m[1] > 0]
        rep = positive[0] if positive else members[0]
        classes.append(PellClassSeq(problem, rep, unit))
    return classes


# -- reproduction of the published sequences -----------------------------------


def quadrature_orbit(count: int) -> list[tuple[int, int]]:
    """Master orbit of u^2 - 8 w^2 = 8 from (4, 1) under the unit (3, 1)."""
    seq = PellClassSeq(PellProblem(8, 8), (4, 1), (3, 1))
    return generate(seq, count)


def quadrature_branches(seed_bound: int = 300) -> list[PellClassSeq]:
    """The four one-sided branches: classes of u^2 - 8 w^2 = 8 under the
    fourth power of the unit, conjugates kept distinct."""
    unit4 = _unit_power(8, (3, 1), 4)
    return class_sequences(PellProblem(8, 8), seed_bound, unit=unit4, merge_conjugates=False)


def median2_sequence(count: int) -> list[tuple[int, int]]:
    """(n, m) pairs of the order-2 median from x^2 - 8 y^2 = 1, x = 2n+1."""
    seq = PellClassSeq(PellProblem(8, 1), (3, 1), (3, 1))
    return [((x - 1) // 2, y) for x, y in generate(seq, count)]


def q3_2_sequence(count: int) -> list[tuple[int, int]]:
    """(n, m_quarters) pairs of the order-2 third quartile from
    Y^2 - 3 X^2 = -2 with Y = 4m+1, X = 2n+1 (trivial head included).

    m is reported in quarter units (m = m_quarters / 4)."""
    seq = PellClassSeq(PellProblem(3, -2), (1, 1), (2, 1))
    out = []
    for yv, xv in generate(seq, count):
        n, rem_n = divmod(xv - 1, 2)
        assert rem_n == 0
        out.append((n, yv - 1))
    return out


def _surd_num_interval(form: fixtures.SurdForm, alpha: int, sq: DyadicInterval) -> DyadicInterval:
    total = DyadicInterval.point(0)
    for a, b, p, q in form.terms:
        coeff = DyadicInterval.point(a) + sq * b
        base = DyadicInterval.point(p) + sq * q
        total = total + coeff * (base**alpha)
    return total


def surd_matches_orbit(name: str, alphas=range(1, 9), bits: int = 160) -> bool:
    """Certified-interval evaluation of a printed closed form brackets the
    recurrence integers exactly (width < 1 and containment)."""
    fix = {s.name: s for s in fixtures.SURD_SEQUENCES}[name]
    d = fix.x_form.d
    sq = refine(AlgebraicRoot(Fraction(d), 2), bits)

    need = max(fix.orbit_index(a) for a in alphas) + 1
    if name == "median2":
        orbit = generate(PellClassSeq(PellProblem(8, 1), (3, 1), (3, 1)), need)

        def nums(x, y):
            return 2 * (x - 1), 8 * y  # 4*n and 8*m
    elif name == "q3-2":
        orbit = generate(PellClassSeq(PellProblem(3, -2), (1, 1), (2, 1)), need)

        def nums(x, y):
            return 2 * x, 6 * y  # 2*(4m+1) and 6*(2n+1)
    else:
        orbit = quadrature_orbit(need)
        if name == "order4-quad-uv":
            def nums(x, y):
                return x, 2 * y  # u and 2*v
        else:
            def nums(x, y):
                return x, 2 * y + 2  # u and 4*j = 2*w + 2

    for alpha in alphas:
        x, y = orbit[fix.orbit_index(alpha)]
        xnum, ynum = nums(x, y)
        ix = _surd_num_interval(fix.x_form, alpha, sq)
        iy = _surd_num_interval(fix.y_form, alpha, sq)
        if not (ix.width < 1 and ix.contains(xnum)):
            return False
        if not (iy.width < 1 and iy.contains(ynum)):
            return False
    return True


def verify_reference_sequences() -> dict:
    """Regenerate every published solution list and diff it tuple by tuple.

    Mismatches are report content (suspected misprints), not failures; the
    corrected value is attached whenever the recurrence disagrees with print.
    """
    report: dict = {"sections": []}

    pairs = median2_sequence(len(fixtures.MEDIAN2_PAIRS))
    rows = [
        {"printed": list(p), "computed": list(c), "match": p == c}
        for p, c in zip(fixtures.MEDIAN2_PAIRS, pairs)
    ]
    report["sections"].append({"name": "median2", "rows": rows})

    q3 = q3_2_sequence(len(fixtures.Q3_2_PAIRS_QUARTERS) + 2)[2:]
    rows = [
        {"printed": list(p), "computed": list(c), "match": p == c}
        for p, c in zip(fixtures.Q3_2_PAIRS_QUARTERS, q3)
    ]
    report["sections"].append({"name": "q3-2", "rows": rows})

    orbit = quadrature_orbit(10)
    for name, printed_row in fixtures.QUADRATURE_BRANCH_ROWS.items():
        idx = fixtures.QUADRATURE_BRANCH_ORBIT_INDEX[name]
        rows = []
        for printed, i in zip(printed_row, idx):
            u, w = orbit[i]
            computed = (u, (w + 1) // 2)
            entry = {"printed": list(printed), "computed": list(computed),
                     "match": tuple(printed) == computed}
            if not entry["match"]:
                entry["note"] = "suspected misprint; closed form and recurrence agree on the computed value"
            rows.append(entry)
        report["sections"].append({"name": name, "rows": rows})

    report["surd_cross_checks"] = {
        s.name: surd_matches_orbit(s.name) for s in fixtures.SURD_SEQUENCES
    }

    mismatches = sum(
        1 for sec in report["sections"] for r in sec["rows"] if not r["match"]
    )
    report["mismatches"] = mismatches
    return report
