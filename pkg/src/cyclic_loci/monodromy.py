"""Brute-force oracle: cyclic covers as explicit permutations of ``n`` sheets.

A cover of a genus ``g'`` surface with ``nu`` branch points is given by the
images in ``Z/n`` of the standard generators of the punctured surface
group.  Each image acts on the sheets ``0..n-1`` by rotation.  Everything
here is computed by walking those permutations (cycle counts, orbit
closure) and not from the closed formulas in :mod:`cyclic_loci.hurwitz`,
so the two can be compared.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb, gcd
from typing import NamedTuple

from .errors import ConsistencyFailure, InvalidDatum, NotAUnit, NotHyperbolic, OddEulerCharacteristic
from .hurwitz import BranchingDatum, ComponentLabel, HurwitzDatum, check_order


@dataclass(frozen=True)
class MonodromyDatum:
    n: int
    g_prime: int
    branch_images: tuple[int, ...]
    handle_images: tuple[int, ...] = ()

    def __post_init__(self):
        check_order(self.n)
        object.__setattr__(self, "branch_images", tuple(c % self.n for c in self.branch_images))
        object.__setattr__(self, "handle_images", tuple(a % self.n for a in self.handle_images))
        if self.g_prime < 0:
            raise InvalidDatum(f"quotient genus {self.g_prime} < 0")
        if len(self.handle_images) != 2 * self.g_prime:
            raise InvalidDatum(
                f"need {2 * self.g_prime} handle images, got {len(self.handle_images)}"
            )
        if any(c == 0 for c in self.branch_images):
            raise InvalidDatum("branch images must be nonzero")
        if sum(self.branch_images) % self.n:
            raise InvalidDatum("branch images must multiply to the identity")

    @classmethod
    def with_generating_handle(cls, n, g_prime, branch_images):
        """First handle image 1, the others 0; connected whenever ``g' >= 1``."""
        handles = (1,) + (0,) * (2 * g_prime - 1) if g_prime else ()
        return cls(n, g_prime, tuple(branch_images), handles)


def rotation(n: int, c: int) -> list[int]:
    return [(s + c) % n for s in range(n)]


def cycle_count(perm: list[int]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycles += 1
        s = start
        while not seen[s]:
            seen[s] = True
            s = perm[s]
    return cycles


def orbit_closure(n: int, generators) -> set[int]:
    """Sheets reachable from sheet 0 under the given rotations."""
    perms = [rotation(n, c) for c in generators]
    reached = {0}
    frontier = [0]
    while frontier:
        s = frontier.pop()
        for p in perms:
            t = p[s]
            if t not in reached:
                reached.add(t)
                frontier.append(t)
    return reached


def _generators(d: MonodromyDatum):
    return d.branch_images + d.handle_images


def is_connected(d: MonodromyDatum) -> bool:
    by_orbit = len(orbit_closure(d.n, _generators(d))) == d.n
    by_gcd = gcd(d.n, *_generators(d)) == 1
    if by_orbit != by_gcd:
        raise ConsistencyFailure(
            f"orbit closure and gcd disagree on connectivity of {d}", counterexample=d
        )
    return by_orbit


def euler_characteristic_formula(d: MonodromyDatum) -> int:
    return d.n * (2 - 2 * d.g_prime - len(d.branch_images)) + sum(
        gcd(d.n, c) for c in d.branch_images
    )


def euler_characteristic_cycles(d: MonodromyDatum) -> int:
    """Sheets over the punctured base, plus the points over each branch point."""
    punctured = d.n * (2 - 2 * d.g_prime - len(d.branch_images))
    return punctured + sum(cycle_count(rotation(d.n, c)) for c in d.branch_images)


class OracleGenus(NamedTuple):
    euler_characteristic: int
    genus: int | Fraction
    components: int


def oracle_genus(d: MonodromyDatum) -> OracleGenus:
    """Euler characteristic by both routes, and the genus of each component.

    ``G`` permutes the components transitively, so they are isomorphic and
    each has Euler characteristic ``chi / components``.
    """
    chi = euler_characteristic_cycles(d)
    chi_formula = euler_characteristic_formula(d)
    if chi != chi_formula:
        raise OddEulerCharacteristic(
            f"cycle count gives chi={chi}, formula gives {chi_formula} for {d}", counterexample=d
        )
    if chi % 2:
        raise OddEulerCharacteristic(f"odd Euler characteristic {chi} for {d}", counterexample=d)
    components = d.n // len(orbit_closure(d.n, _generators(d)))
    genus = 1 - Fraction(chi, 2 * components)
    if genus.denominator == 1:
        genus = int(genus)
    return OracleGenus(chi, genus, components)


def _is_unit(u: int, n: int) -> bool:
    # multiplication by u permutes Z/n
    return len({u * x % n for x in range(n)}) == n


def twist_datum(d: MonodromyDatum, u: int) -> MonodromyDatum:
    if not _is_unit(u, d.n):
        raise NotAUnit(f"{u} is not a unit mod {d.n}")
    return MonodromyDatum(
        d.n,
        d.g_prime,
        tuple(u * c for c in d.branch_images),
        tuple(u * a for a in d.handle_images),
    )


def subgroup_generated(n: int, elements) -> set[int]:
    return orbit_closure(n, elements)


def _twist_key(n, branch, r, u):
    new_r = [0] * n
    for i, c in enumerate(r):
        new_r[u * i % n] = c
    return (tuple(sorted(u * c % n for c in branch)), tuple(new_r))


def _markings(n, branch, m):
    """All marking vectors of degree ``m``, orbit sizes read from cycle counts."""
    counts = Counter(branch)
    orbit_size = {i: cycle_count(rotation(n, i)) for i in counts}
    residues = sorted(counts)
    ranges = [range(m // n + 1)] + [range(min(counts[i], m) + 1) for i in residues]
    for choice in product(*ranges):
        degree = n * choice[0] + sum(orbit_size[i] * c for i, c in zip(residues, choice[1:]))
        if degree != m:
            continue
        r = [0] * n
        r[0] = choice[0]
        for i, c in zip(residues, choice[1:]):
            r[i] = c
        yield tuple(r)


def oracle_enumerate(g: int, m: int, n: int) -> set[ComponentLabel]:
    """Components of the special locus found by exhausting monodromy data."""
    check_order(n)
    if 2 * g - 2 + m <= 0:
        raise NotHyperbolic(f"2g - 2 + m = {2 * g - 2 + m} <= 0")
    unit_list = [u for u in range(1, n) if _is_unit(u, n)]
    labels = set()
    g_prime = 0
    while n * (2 * g_prime - 2) <= 2 * g - 2:
        defect = 2 * g - 2 - n * (2 * g_prime - 2)
        for nu in range(2 * defect // n + 1):
            for branch in combinations_with_replacement(range(1, n), nu):
                if sum(branch) % n:
                    continue
                d = MonodromyDatum.with_generating_handle(n, g_prime, branch)
                if not is_connected(d):
                    continue
                if oracle_genus(d).genus != g:
                    continue
                inertia = subgroup_generated(n, branch)
                for r in _markings(n, branch, m):
                    orbit = {_twist_key(n, branch, r, u) for u in unit_list}
                    k_min, r_min = min(orbit)
                    counts = Counter(branch)
                    psi = 1
                    for i, c in counts.items():
                        psi *= comb(c, r[i])
                    labels.add(
                        ComponentLabel(
                            g=g,
                            m=m,
                            n=n,
                            g_prime=g_prime,
                            canonical_kr=BranchingDatum(HurwitzDatum(n, k_min), r_min),
                            aut_orbit_size=len(orbit),
                            psi_degree=psi,
                            etale_part=n // len(inertia),
                            exponent_modulus=len(inertia),
                        )
                    )
        g_prime += 1
    return labels
