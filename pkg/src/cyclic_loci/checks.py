"""Consistency sweeps behind ``cyclic-loci check``.

Every property is checked exhaustively over a bounded range and counted.
The first failure raises :class:`ConsistencyFailure` carrying a
counterexample.  Cells of the atlas sweep are independent and may be
farmed out to worker processes; counts are merged in cell order so the
report does not depend on scheduling.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement
from math import factorial, gcd

from . import galois, kummer, monodromy
from .enumeration import enumerate_components, enumerate_strata
from .errors import ConsistencyFailure, NegativeGenus, NonIntegralGenus
from .hurwitz import (
    BranchingDatum,
    HurwitzDatum,
    canonicalize,
    etale_part,
    is_hyperbolic,
    label_violations,
    marked_degree,
    psi_degree,
    rh_genus,
    totient,
    unit_orbit,
    unit_twist,
    units,
    validate_branching,
)
from .records import atlas_from_json, atlas_to_json


@dataclass(frozen=True)
class SweepConfig:
    max_genus: int = 4
    max_order: int = 8
    max_marks: int = 4
    max_prime_genus: int = 2
    max_branch: int = 6
    galois_order: int = 24
    galois_length: int = 4


def require(ok: bool, prop: str, counterexample) -> None:
    if not ok:
        raise ConsistencyFailure(f"property {prop!r} failed", counterexample=counterexample)


def worker_count() -> int:
    value = os.environ.get("ATLAS_THREADS")
    if value:
        return max(1, int(value))
    return os.cpu_count() or 1


# -- datum-level sweeps ------------------------------------------------------


def hurwitz_data(max_order: int, max_nu: int):
    """Every zero-sum exponent multiset with ``nu <= max_nu`` for ``2 <= n <= max_order``."""
    for n in range(2, max_order + 1):
        for nu in range(max_nu + 1):
            for exps in combinations_with_replacement(range(1, n), nu):
                if sum(exps) % n == 0:
                    yield HurwitzDatum(n, exps)


def exponent_lists(max_order: int, max_length: int):
    """Nonzero exponent multisets of length ``1..max_length``, no zero-sum condition."""
    for n in range(2, max_order + 1):
        for length in range(1, max_length + 1):
            for exps in combinations_with_replacement(range(1, n), length):
                yield n, exps


def check_genus_oracle(cfg: SweepConfig, counts: Counter) -> None:
    for k in hurwitz_data(cfg.max_order, cfg.max_branch):
        n = k.n
        for g_prime in range(cfg.max_prime_genus + 1):
            try:
                g = rh_genus(n, g_prime, k)
            except NegativeGenus:
                g = None
            except NonIntegralGenus as exc:
                raise ConsistencyFailure(str(exc), exc.counterexample) from None
            counts["parity"] += 1

            d = monodromy.MonodromyDatum.with_generating_handle(n, g_prime, k.exponents)
            require(
                monodromy.euler_characteristic_formula(d) == monodromy.euler_characteristic_cycles(d),
                "chi_formula_vs_cycles",
                d,
            )
            counts["chi_formula_vs_cycles"] += 1
            og = monodromy.oracle_genus(d)
            connected = monodromy.is_connected(d)
            counts["connectivity_two_ways"] += 1
            if connected:
                require(g == og.genus, "rh_genus_vs_oracle", (d, g, og))
                counts["rh_genus_vs_oracle"] += 1
            else:
                require(g_prime == 0 and etale_part(n, k) > 1, "disconnected_only_when_etale", d)
            for u in units(n):
                t = monodromy.twist_datum(d, u)
                require(
                    monodromy.oracle_genus(t) == og and monodromy.is_connected(t) == connected,
                    "oracle_twist_invariance",
                    (d, u),
                )
                counts["oracle_twist_invariance"] += 1

            if g_prime == 1:
                # connectivity agreement over every handle image
                for a in range(n):
                    for b in range(n):
                        monodromy.is_connected(monodromy.MonodromyDatum(n, 1, k.exponents, (a, b)))
                        counts["connectivity_two_ways"] += 1


def check_kummer(cfg: SweepConfig, counts: Counter) -> None:
    for k in hurwitz_data(cfg.max_order, cfg.max_branch):
        div = kummer.realize_hurwitz(k.n, k)
        points, back = kummer.branch_data(div)
        require(back == k, "kummer_round_trip", (k, div))
        counts["kummer_round_trip"] += 1
        require(
            all(e % k.n for _, e in points) and sum(back.exponents) % k.n == 0,
            "kummer_reduction_soundness",
            div,
        )
        counts["kummer_reduction_soundness"] += 1
        for u in units(k.n):
            twisted = unit_twist(BranchingDatum.unmarked(k), u).k
            require(kummer.twisted_branch_data(div, u) == twisted, "kummer_twist_compatibility", (div, u))
            counts["kummer_twist_compatibility"] += 1
        require(
            kummer.generic_galois_group_order(k)
            == _factorial_product(len(b) for b in kummer.GenericOrbitModel.generic(k).blocks.values()),
            "generic_galois_group_order",
            k,
        )
        counts["generic_galois_group_order"] += 1


def _factorial_product(sizes) -> int:
    out = 1
    for s in sizes:
        out *= factorial(s)
    return out


def check_exponent_arithmetic(cfg: SweepConfig, counts: Counter, notes: list[str]) -> None:
    cache: dict[tuple, frozenset] = {}
    non_unit = 0
    for n, exps in exponent_lists(cfg.galois_order, cfg.galois_length):
        d = gcd(n, *exps)
        modulus = galois.determined_exponent_modulus(n, exps)
        require(modulus * d == n, "modulus_times_etale_part", (n, exps))
        counts["modulus_times_etale_part"] += 1
        orders = frozenset(n // gcd(n, e) for e in exps)
        for u in units(n):
            key = (n, orders, u)
            if key not in cache:
                sols = galois.inertia_exponent_solutions(n, exps, u)
                # independent restatement: u plus multiples of the modulus
                require(
                    sols == sorted((u + t * modulus) % n for t in range(d)),
                    "solutions_coset_form",
                    (n, exps, u),
                )
                cache[key] = frozenset(sols)
            sols = cache[key]
            require(len(sols) == d and u in sols, "inertia_solution_count", (n, exps, u, sorted(sols)))
            if d == 1:
                require(sols == {u}, "exponent_determined", (n, exps, u))
                counts["exponent_determined"] += 1
            if any(gcd(s, n) != 1 for s in sols):
                non_unit += 1
            counts["inertia_solution_count"] += 1
    notes.append(
        f"inertia solutions containing a non-unit: {non_unit} cases (allowed; only u is guaranteed)"
    )


# -- atlas cells ---------------------------------------------------------------


def hyperbolic_cells(cfg: SweepConfig) -> list[tuple[int, int, int]]:
    return [
        (g, m, n)
        for g in range(cfg.max_genus + 1)
        for m in range(cfg.max_marks + 1)
        for n in range(2, cfg.max_order + 1)
        if is_hyperbolic(g, m)
    ]


def check_cell(g: int, m: int, n: int) -> Counter:
    counts: Counter = Counter()
    cell = {"g": g, "m": m, "n": n}
    atlas = enumerate_components(g, m, n)
    oracle = monodromy.oracle_enumerate(g, m, n)
    if set(atlas) != oracle:
        raise ConsistencyFailure(
            f"enumeration and oracle disagree at g={g}, m={m}, n={n}",
            counterexample={
                **cell,
                "only_enumeration": sorted(map(repr, set(atlas) - oracle)),
                "only_oracle": sorted(map(repr, oracle - set(atlas))),
            },
        )
    counts["component_sets"] += 1

    for lab in atlas:
        require(not label_violations(lab), "label_invariants", (lab, label_violations(lab)))
        require(
            validate_branching(g, m, n, lab.g_prime, lab.canonical_kr).ok,
            "labels_validate",
            lab,
        )
        counts["label_invariants"] += 1

    filtered = enumerate_components(g, m, n, no_etale_only=True)
    require(set(filtered) <= set(atlas), "etale_filter_monotone", cell)
    require(all(lab.etale_part == 1 for lab in filtered), "etale_filter_monotone", cell)
    counts["etale_filter_monotone"] += 1

    strata = enumerate_strata(g, m, n)
    require(
        len(strata) == sum(lab.aut_orbit_size for lab in atlas), "strata_count", (cell, len(strata))
    )
    counts["strata_count"] += 1

    unit_list = units(n)
    for g_prime, kr in strata:
        canon = canonicalize(kr)
        require(canonicalize(canon) == canon, "canonical_idempotent", kr)
        require(totient(n) % len(unit_orbit(kr)) == 0, "orbit_divides_totient", kr)
        degree = psi_degree(kr)
        require(degree >= 1, "psi_positive", kr)
        if not any(kr.r[1:]):
            require(degree == 1, "psi_positive", kr)
        require(kummer.stratum_fiber_count(kr) == degree, "fiber_count_equals_psi_degree", kr)
        counts["fiber_count_equals_psi_degree"] += 1
        genus = rh_genus(n, g_prime, kr.k)
        for u in unit_list:
            t = unit_twist(kr, u)
            require(canonicalize(t) == canon, "canonical_stability", (kr, u))
            require(
                rh_genus(n, g_prime, t.k) == genus and marked_degree(n, t.r) == marked_degree(n, kr.r),
                "twist_preserves_geometry",
                (kr, u),
            )
            counts["canonical_stability"] += 1
            for v in unit_list:
                require(
                    unit_twist(t, v) == unit_twist(kr, u * v % n), "group_action_law", (kr, u, v)
                )
                counts["group_action_law"] += 1
        require(unit_twist(kr, 1) == kr, "group_action_law", kr)

    galois.twist_orbit_report(atlas)
    counts["twist_orbit_report"] += len(atlas)

    text = atlas_to_json(atlas)
    require(atlas_to_json(atlas_from_json(text)) == text, "json_round_trip", cell)
    counts["json_round_trip"] += 1
    return counts


def _check_cell_args(args):
    return check_cell(*args)


def run_checks(cfg: SweepConfig = SweepConfig(), workers: int | None = None):
    """Run every property; returns ``(counts, notes)``."""
    counts: Counter = Counter()
    notes: list[str] = []
    cells = hyperbolic_cells(cfg)
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_cell_args, cells))
    else:
        results = [check_cell(*c) for c in cells]
    for c in results:
        counts.update(c)
    for prop in ("component_sets", "label_invariants", "canonical_stability", "group_action_law",
                 "fiber_count_equals_psi_degree", "strata_count", "twist_orbit_report",
                 "json_round_trip", "etale_filter_monotone"):
        counts.setdefault(prop, 0)

    check_genus_oracle(cfg, counts)
    check_kummer(cfg, counts)
    check_exponent_arithmetic(cfg, counts, notes)
    notes.insert(0, f"sweep: {asdict(cfg)}")
    notes.insert(1, f"hyperbolic (g, m, n) cells: {len(cells)}, components found: {counts['label_invariants']}")
    return counts, notes
