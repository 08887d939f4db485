"""Hurwitz data, branching data and their unit-group action.

A cyclic cover of order ``n`` is recorded by the multiset of its local
exponents at the branch points (a :class:`HurwitzDatum`).  Adding a
G-invariant marked divisor gives a :class:`BranchingDatum`: the exponents
together with a vector ``r`` indexed by residues mod ``n``, where ``r[0]``
counts free marked orbits and ``r[i]`` (``i != 0``) counts marked orbits
sitting over a branch point of exponent ``i``.

Changing the identification of ``G`` with the ``n``-th roots of unity acts
on both by a unit ``u`` mod ``n``; components of the special locus are
indexed by orbits of this action, represented here by their
lexicographically smallest member.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import comb, gcd
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    InvalidDatum,
    InvalidMarking,
    InvalidOrder,
    NegativeGenus,
    NonIntegralGenus,
    NotAUnit,
)


def check_order(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidOrder(f"cyclic order must be an integer >= 2, got {n!r}")
    return n


def units(n: int) -> list[int]:
    """Residues in ``1..n-1`` prime to ``n``, ascending (``[1]`` for n=2)."""
    check_order(n)
    return [u for u in range(1, n) if gcd(u, n) == 1]


def totient(n: int) -> int:
    return len(units(n))


def check_unit(u: int, n: int) -> int:
    if gcd(u, n) != 1:
        raise NotAUnit(f"{u} is not a unit mod {n}")
    return u % n


def is_hyperbolic(g: int, m: int) -> bool:
    return 2 * g - 2 + m > 0


@dataclass(frozen=True)
class HurwitzDatum:
    """Branch exponents of a cyclic ``n``-cover, as a sorted tuple."""

    n: int
    exponents: tuple[int, ...] = ()

    def __post_init__(self):
        check_order(self.n)
        exps = tuple(self.exponents)
        object.__setattr__(self, "exponents", exps)
        for e in exps:
            if isinstance(e, bool) or not isinstance(e, int) or not 0 < e < self.n:
                raise InvalidDatum(f"exponent {e!r} not in 1..{self.n - 1}")
        if list(exps) != sorted(exps):
            raise InvalidDatum(f"exponents {exps} are not sorted")
        if sum(exps) % self.n:
            raise InvalidDatum(f"exponents {exps} do not sum to 0 mod {self.n}")

    @classmethod
    def from_residues(cls, n: int, values: Iterable[int]) -> HurwitzDatum:
        """Reduce arbitrary integers mod ``n`` and sort them."""
        check_order(n)
        reduced = []
        for v in values:
            if v % n == 0:
                raise InvalidDatum(f"exponent {v} is 0 mod {n}")
            reduced.append(v % n)
        return cls(n, tuple(sorted(reduced)))

    @property
    def nu(self) -> int:
        return len(self.exponents)

    def counts(self) -> Counter:
        return Counter(self.exponents)


def exponent_count(k: HurwitzDatum, i: int) -> int:
    """Multiplicity of residue ``i`` among the exponents (0 for ``i = 0``)."""
    i %= k.n
    if i == 0:
        return 0
    return k.exponents.count(i)


@dataclass(frozen=True)
class BranchingDatum:
    """A Hurwitz datum with a marking vector ``r`` of length ``n``."""

    k: HurwitzDatum
    r: tuple[int, ...]

    def __post_init__(self):
        r = tuple(self.r)
        object.__setattr__(self, "r", r)
        n = self.k.n
        if len(r) != n:
            raise InvalidMarking(f"marking vector has length {len(r)}, expected {n}")
        if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in r):
            raise InvalidMarking(f"marking vector {r} has negative or non-integer entries")
        counts = self.k.counts()
        for i in range(1, n):
            if r[i] > counts[i]:
                raise InvalidMarking(
                    f"r[{i}] = {r[i]} exceeds the {counts[i]} branch points with exponent {i}"
                )

    @classmethod
    def unmarked(cls, k: HurwitzDatum) -> BranchingDatum:
        return cls(k, (0,) * k.n)

    @classmethod
    def from_sparse(cls, k: HurwitzDatum, marks: dict[int, int]) -> BranchingDatum:
        """Build ``r`` from ``{residue: count}``; residues are taken mod ``n``."""
        r = [0] * k.n
        for i, c in marks.items():
            r[i % k.n] += c
        return cls(k, tuple(r))

    @property
    def n(self) -> int:
        return self.k.n

    def sort_key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.k.exponents, self.r)


def rh_genus(n: int, g_prime: int, k: HurwitzDatum) -> int:
    """Genus of the cover from Riemann-Hurwitz.

    ``2g - 2 = n(2g' - 2) + sum(n - gcd(n, k_i))``.
    """
    check_order(n)
    if k.n != n:
        raise InvalidDatum(f"datum is over Z/{k.n}, not Z/{n}")
    if g_prime < 0:
        raise NegativeGenus(f"quotient genus {g_prime} < 0")
    rhs = n * (2 * g_prime - 2) + sum(n - gcd(n, e) for e in k.exponents)
    if rhs % 2:
        raise NonIntegralGenus(
            f"2g - 2 = {rhs} is odd for n={n}, g'={g_prime}, k={k.exponents}",
            counterexample={"n": n, "g_prime": g_prime, "k": list(k.exponents)},
        )
    g = rhs // 2 + 1
    if g < 0:
        raise NegativeGenus(f"n={n}, g'={g_prime}, k={k.exponents} gives genus {g}")
    return g


def marked_degree(n: int, r: Sequence[int]) -> int:
    """Number of marked points on the cover.

    A free orbit has ``n`` points; an orbit over a branch point of exponent
    ``i`` has ``gcd(n, i)`` points.
    """
    return n * r[0] + sum(gcd(n, i) * r[i] for i in range(1, n))


def etale_part(n: int, k: HurwitzDatum) -> int:
    """``d = gcd(n, k_1, ..., k_nu)``; the inertia subgroup is ``dZ/nZ``.

    ``d == 1`` means the cover has no etale factorization.  An empty datum
    gives ``n``.
    """
    return gcd(n, *k.exponents)


def unit_twist(kr: BranchingDatum, u: int) -> BranchingDatum:
    n = kr.n
    u = check_unit(u, n)
    exps = tuple(sorted(u * e % n for e in kr.k.exponents))
    r = [0] * n
    for i, c in enumerate(kr.r):
        r[u * i % n] = c
    return BranchingDatum(HurwitzDatum(n, exps), tuple(r))


def unit_orbit(kr: BranchingDatum) -> dict[BranchingDatum, list[int]]:
    """Distinct twists of ``kr``, each mapped to the units producing it."""
    orbit: dict[BranchingDatum, list[int]] = {}
    for u in units(kr.n):
        orbit.setdefault(unit_twist(kr, u), []).append(u)
    return orbit


def canonicalize(kr: BranchingDatum) -> BranchingDatum:
    """Smallest twist, comparing sorted exponents first, then ``r``."""
    return min(unit_orbit(kr), key=BranchingDatum.sort_key)


def psi_degree(kr: BranchingDatum) -> int:
    """Degree of the map forgetting the free marked orbits.

    Product over ``i != 0`` of ``C(#exponents equal to i, r[i])``.
    """
    counts = kr.k.counts()
    degree = 1
    for i in range(1, kr.n):
        if kr.r[i] > counts[i]:
            raise InvalidMarking(f"r[{i}] = {kr.r[i]} > {counts[i]}")
        degree *= comb(counts[i], kr.r[i])
    return degree


class Violation(NamedTuple):
    rule: str
    detail: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def rules(self) -> set[str]:
        return {v.rule for v in self.violations}


def validate_branching(g, m, n, g_prime, kr) -> ValidationReport:
    """Check every admissibility rule and collect the failures.

    ``kr`` may be a :class:`BranchingDatum` or a raw ``(exponents, r)``
    pair; raw input is checked without being normalized first, so nothing
    here raises on bad data.
    """
    bad: list[Violation] = []
    try:
        check_order(n)
    except InvalidOrder as exc:
        return ValidationReport((Violation("order", str(exc)),))

    if isinstance(kr, BranchingDatum):
        exps, r = list(kr.k.exponents), list(kr.r)
        if kr.n != n:
            bad.append(Violation("order", f"datum is over Z/{kr.n}, not Z/{n}"))
    else:
        exps, r = list(kr[0]), list(kr[1])

    residues = [e % n for e in exps]
    if any(e == 0 for e in residues):
        bad.append(Violation("nonzero_exponents", f"{exps} contains a multiple of {n}"))
    if sum(exps) % n:
        bad.append(Violation("zero_sum", f"sum of {exps} is {sum(exps) % n} mod {n}"))
    if g_prime < 0:
        bad.append(Violation("genus", f"quotient genus {g_prime} < 0"))
    else:
        rhs = n * (2 * g_prime - 2) + sum(n - gcd(n, e) for e in residues)
        if rhs % 2:
            bad.append(Violation("genus", f"2g - 2 = {rhs} is odd"))
        elif rhs // 2 + 1 < 0:
            bad.append(Violation("genus", f"Riemann-Hurwitz gives negative genus {rhs // 2 + 1}"))
        elif rhs // 2 + 1 != g:
            bad.append(Violation("genus", f"Riemann-Hurwitz gives genus {rhs // 2 + 1}, not {g}"))

    if len(r) != n or any(x < 0 for x in r):
        bad.append(Violation("marking_shape", f"r = {r} is not a length-{n} non-negative vector"))
    else:
        degree = marked_degree(n, r)
        if degree != m:
            bad.append(Violation("marked_degree", f"marking has degree {degree}, not {m}"))
        counts = Counter(residues)
        over = [i for i in range(1, n) if r[i] > counts[i]]
        if over:
            bad.append(Violation("marking_support", f"r exceeds exponent counts at residues {over}"))

    if g_prime == 0 and gcd(n, *residues) != 1:
        bad.append(
            Violation("connectivity", f"etale part {gcd(n, *residues)} != 1 over the projective line")
        )
    if not is_hyperbolic(g, m):
        bad.append(Violation("hyperbolicity", f"2g - 2 + m = {2 * g - 2 + m} <= 0"))
    return ValidationReport(tuple(bad))


@dataclass(frozen=True)
class ComponentLabel:
    """One irreducible component: a canonical branching datum plus metadata."""

    g: int
    m: int
    n: int
    g_prime: int
    canonical_kr: BranchingDatum
    aut_orbit_size: int
    psi_degree: int
    etale_part: int
    exponent_modulus: int

    @property
    def nu(self) -> int:
        return self.canonical_kr.k.nu

    def sort_key(self):
        return (self.g_prime, self.canonical_kr.k.exponents, self.canonical_kr.r)


def make_label(g: int, m: int, g_prime: int, kr: BranchingDatum) -> ComponentLabel:
    """Label of the component containing ``kr``; no validation is done here."""
    n = kr.n
    d = etale_part(n, kr.k)
    return ComponentLabel(
        g=g,
        m=m,
        n=n,
        g_prime=g_prime,
        canonical_kr=canonicalize(kr),
        aut_orbit_size=len(unit_orbit(kr)),
        psi_degree=psi_degree(kr),
        etale_part=d,
        exponent_modulus=n // d,
    )


def label_violations(label: ComponentLabel) -> list[str]:
    """Type invariants of a :class:`ComponentLabel` that fail."""
    kr = label.canonical_kr
    n = label.n
    out = []
    if kr.n != n:
        out.append("canonical_kr is over a different order")
        return out
    if canonicalize(kr) != kr:
        out.append("canonical_kr is not a canonical fixpoint")
    try:
        if rh_genus(n, label.g_prime, kr.k) != label.g:
            out.append("Riemann-Hurwitz genus mismatch")
    except (NegativeGenus, NonIntegralGenus) as exc:
        out.append(f"Riemann-Hurwitz: {exc}")
    if marked_degree(n, kr.r) != label.m:
        out.append("marked degree mismatch")
    if label.aut_orbit_size < 1 or totient(n) % label.aut_orbit_size:
        out.append("orbit size does not divide phi(n)")
    if label.exponent_modulus * label.etale_part != n:
        out.append("exponent_modulus * etale_part != n")
    if not is_hyperbolic(label.g, label.m):
        out.append("not hyperbolic")
    return out
