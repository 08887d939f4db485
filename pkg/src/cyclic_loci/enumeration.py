"""Direct enumeration of components from the branching-data side."""

from __future__ import annotations

from math import gcd

from .errors import ConsistencyFailure, NotHyperbolic
from .hurwitz import (
    BranchingDatum,
    ComponentLabel,
    HurwitzDatum,
    canonicalize,
    check_order,
    etale_part,
    is_hyperbolic,
    make_label,
    rh_genus,
    validate_branching,
)


def _exponent_multisets(n: int, defect: int, smallest: int = 1):
    """Non-decreasing exponent tuples whose Riemann-Hurwitz defects add up to ``defect``.

    The defect of exponent ``e`` is ``n - gcd(n, e) >= 1``, so the recursion
    terminates; the zero-sum condition is checked by the caller.
    """
    if defect == 0:
        yield ()
        return
    for e in range(smallest, n):
        cost = n - gcd(n, e)
        if cost <= defect:
            for rest in _exponent_multisets(n, defect - cost, e):
                yield (e,) + rest


def enumerate_hurwitz_data(g: int, n: int) -> list[tuple[int, HurwitzDatum]]:
    """All ``(g', k)`` with a connected cover of genus ``g``.

    Sorted by ``g'`` and then by exponent tuple.
    """
    check_order(n)
    out = []
    for g_prime in range(g + 1):
        twice_defect = 2 * g - 2 - n * (2 * g_prime - 2)
        if twice_defect < 0:
            continue
        found = []
        for exps in _exponent_multisets(n, twice_defect):
            if sum(exps) % n:
                continue
            k = HurwitzDatum(n, exps)
            if g_prime == 0 and etale_part(n, k) != 1:
                continue
            if rh_genus(n, g_prime, k) != g:
                raise ConsistencyFailure(
                    f"defect search produced {exps} with the wrong genus",
                    counterexample={"n": n, "g_prime": g_prime, "k": list(exps), "g": g},
                )
            found.append(k)
        out.extend((g_prime, k) for k in sorted(found, key=lambda k: k.exponents))
    return out


def enumerate_markings(k: HurwitzDatum, m: int) -> list[tuple[int, ...]]:
    """Marking vectors of degree ``m`` supported on the branch exponents of ``k``.

    Ordered by number of free orbits, largest first.
    """
    n = k.n
    counts = k.counts()
    residues = sorted(counts)
    out = []

    def fill(idx, remaining, r):
        if idx == len(residues):
            if remaining == 0:
                out.append(tuple(r))
            return
        i = residues[idx]
        size = gcd(n, i)
        for c in range(min(counts[i], remaining // size) + 1):
            r[i] = c
            fill(idx + 1, remaining - c * size, r)
        r[i] = 0

    for free in range(m // n, -1, -1):
        r = [0] * n
        r[0] = free
        fill(0, m - free * n, r)
    return out


def enumerate_strata(g: int, m: int, n: int) -> list[tuple[int, BranchingDatum]]:
    """Every pre-canonical ``(g', kr)``, before the unit-group quotient."""
    if not is_hyperbolic(g, m):
        raise NotHyperbolic(f"2g - 2 + m = {2 * g - 2 + m} <= 0 for g={g}, m={m}")
    out = []
    for g_prime, k in enumerate_hurwitz_data(g, n):
        for r in enumerate_markings(k, m):
            out.append((g_prime, BranchingDatum(k, r)))
    return out


def enumerate_components(g: int, m: int, n: int, no_etale_only: bool = False) -> list[ComponentLabel]:
    """One label per irreducible component of the cyclic special locus.

    With ``no_etale_only`` only components without etale factorization
    (``etale_part == 1``) are kept.
    """
    labels: dict[tuple, ComponentLabel] = {}
    for g_prime, kr in enumerate_strata(g, m, n):
        report = validate_branching(g, m, n, g_prime, kr)
        if not report.ok:
            raise ConsistencyFailure(
                f"enumerated datum fails validation: {report.violations}",
                counterexample={"g_prime": g_prime, "k": list(kr.k.exponents), "r": list(kr.r)},
            )
        key = (g_prime, canonicalize(kr))
        if key not in labels:
            labels[key] = make_label(g, m, g_prime, kr)
    result = sorted(labels.values(), key=ComponentLabel.sort_key)
    if no_etale_only:
        result = [lab for lab in result if lab.etale_part == 1]
    return result
