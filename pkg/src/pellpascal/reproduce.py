"""The full reproduction suite: one deterministic JSON document diffing
every computed table, sequence, sieve and search result against the
published reference data.
"""

from __future__ import annotations

from fractions import Fraction

from . import contfrac, identities, pascal, pell, search, sieve
from .exactnum import AlgebraicRoot, refine
from .pascal import asym_residual, family
from .search import MedianDomain


def _strip_key(doc, key: str):
    if isinstance(doc, dict):
        return {k: _strip_key(v, key) for k, v in doc.items() if k != key}
    if isinstance(doc, list):
        return [_strip_key(v, key) for v in doc]
    return doc


def strip_timing(doc):
    """Timing fields are the only nondeterministic output; remove them."""
    return _strip_key(doc, "seconds")


def _search_section(bound: int, workers: int) -> list[dict]:
    jobs = [
        (family(2), MedianDomain.QUARTERS),
        (family(2, "q3"), MedianDomain.QUARTERS),
        (family(3), MedianDomain.QUARTERS),
        (family(4), MedianDomain.QUARTERS),
        (family(5), MedianDomain.QUARTERS),
        (family(6), MedianDomain.QUARTERS),
    ]
    out = []
    for fam, dom in jobs:
        rep = search.exhaustive(fam, bound, dom, workers=workers)
        out.append(search.report_json(rep))
    return out


def _sieve_section() -> dict:
    entries = []
    for name, modulus in [("k3.median", 3), ("k4.median", 5), ("k5.median", 5), ("k6.median", 7)]:
        table = sieve.admissible_table(pascal.curve_by_name(name), modulus)
        entries.append(sieve.table_json(table))
    half = pascal.curve_by_name("order4-half-quad")
    certificate = sieve.prove_empty(half, [3, 4, 5, 7, 8])
    return {
        "tables": entries,
        "half-branch-empty": {
            "curve": "order4-half-quad",
            "first_certificate": certificate,
            "certificate_at_8": sieve.prove_empty(half, [8]),
            "rechecked": sieve.recheck_empty(half, 8),
        },
    }


def _quasi_section(count: int = 10) -> list[dict]:
    out = []
    for fam_name, track in [
        ("k2.median", "integer"), ("k2.q3", "half"),
        ("k3.median", "integer"), ("k3.median", "half"),
        ("k4.median", "integer"), ("k5.median", "integer"), ("k6.median", "integer"),
        ("k3.q1", "quarter"), ("k3.q3", "quarter"), ("k6.q3", "quarter"),
    ]:
        fam = next(f for f in pascal.all_families() if f.name == fam_name)
        entries = search.quasi_generate(fam, count, track)
        ratios = [e.order_ratio for e in entries]
        out.append({
            "family": fam_name,
            "track": track,
            "entries": [
                {
                    "index": e.index, "p": str(e.p), "q": str(e.q),
                    "n": str(e.n), "m_quarters": str(e.m.quarters),
                    "on_grid": e.on_grid, "residual": str(e.residual),
                    "order_ratio": str(e.order_ratio),
                }
                for e in entries
            ],
            "max_order_ratio_on_grid": str(max(
                (e.order_ratio for e in entries if e.on_grid), default=Fraction(0))),
            "max_order_ratio": str(max(ratios, default=Fraction(0))),
        })
    return out


def _asym_section() -> dict:
    bits = 96
    b2 = refine(AlgebraicRoot(Fraction(1, 2), 2), bits)
    rows2 = []
    for n, m in pell.median2_sequence(10):
        iv = asym_residual(2, n, m, 1, b2)
        rows2.append({"n": str(n), "m": str(m), "lo": str(iv.lo), "hi": str(iv.hi)})
    bound2 = max(max(abs(Fraction(r["lo"])), abs(Fraction(r["hi"]))) for r in rows2)

    b3 = refine(AlgebraicRoot(Fraction(1, 2), 3), bits)
    rows3 = []
    for e in search.quasi_generate(family(3), 10, "integer"):
        iv = asym_residual(3, e.n + 1, e.m.value + 1, 1, b3)
        ratio = max(abs(iv.lo), abs(iv.hi)) / e.n
        rows3.append({"n": str(e.n), "m_quarters": str(e.m.quarters), "ratio_bound": str(ratio)})
    bound3 = max(Fraction(r["ratio_bound"]) for r in rows3)
    return {
        "order2": {"pairs": rows2, "residual_bound": str(bound2)},
        "order3": {"pairs": rows3, "residual_over_n_bound": str(bound3)},
    }


def reproduce(bound: int = 20000, workers: int = 1, orbit_limit: int = 10**16,
              surface_limit: int = 10**5, quasi_count: int = 10) -> dict:
    """Run the whole reproduction suite; deterministic except for 'seconds'
    fields, which callers strip before comparing runs."""
    doc = {
        "schema": "pellpascal/reproduce/v1",
        "parameters": {
            "bound": str(bound),
            "orbit_limit": str(orbit_limit), "surface_limit": str(surface_limit),
        },
        "identities": [f.to_json() for f in identities.run_identity_suite()],
        "sequences": pell.verify_reference_sequences(),
        "convergents": contfrac.approximation_table(),
        "sieve": _sieve_section(),
        "quadrature": {
            "order4": _order4_json(search.quadrature_scan_order4(orbit_limit)),
            "order6": _order6_json(search.quadrature_scan_order6(surface_limit)),
        },
        "searches": _search_section(bound, workers),
        "quasi": _quasi_section(quasi_count),
        "asymmetric": _asym_section(),
    }
    return doc


def _order4_json(scan: dict) -> dict:
    return {
        "limit": str(scan["limit"]),
        "terms_scanned": scan["terms_scanned"],
        "hits": [
            {"u": str(h["u"]), "j": str(h["j"]), "n": str(h["n"]), "m": str(h["m"]),
             "trivial": h["trivial"]}
            for h in scan["hits"]
        ],
    }


def _order6_json(scan: dict) -> dict:
    return {
        "limit": str(scan["limit"]),
        "integer_points": [[str(u), str(v)] for u, v in scan["integer_points"]],
        "hits": [{k: str(v) for k, v in h.items()} for h in scan["hits"]],
        "half_integer_hits": [[str(u), str(v)] for u, v in scan["half_integer_hits"]],
        "rejected_points": [[str(u), str(v)] for u, v in scan["rejected_points"]],
    }
