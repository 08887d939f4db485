"""Exponent arithmetic of the Galois action on cyclic stack inertia.

A Galois element enters only through ``u``, its cyclotomic character
reduced mod ``n``.  It sends a generator ``gamma`` of the automorphism
group to a conjugate of ``gamma**l`` for some exponent ``l``.  At each
branch point the inertia generator is ``gamma**(n/a)`` with ``a`` the
inertia order, and the branch cycle argument forces ``l = u (mod a)``.
The exponent is therefore pinned modulo the lcm of the inertia orders,
which is all of ``n`` exactly when the cover has no etale factorization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Sequence

from .errors import ConsistencyFailure, EmptyInertia, InvalidDatum
from .hurwitz import (
    BranchingDatum,
    ComponentLabel,
    canonicalize,
    check_order,
    check_unit,
    totient,
    unit_orbit,
    unit_twist,
    units,
)


def _reduced(n: int, k: Sequence[int]) -> list[int]:
    check_order(n)
    reduced = [e % n for e in k]
    if any(e == 0 for e in reduced):
        raise InvalidDatum(f"exponents {list(k)} include a multiple of {n}")
    if not reduced:
        raise EmptyInertia("no branch exponents; the exponent is not determined")
    return reduced


@dataclass(frozen=True)
class ExponentConstraintSystem:
    """Congruences ``l = u (mod a_i)``, one per branch exponent."""

    n: int
    k: tuple[int, ...]
    u: int
    moduli: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        reduced = _reduced(self.n, self.k)
        object.__setattr__(self, "k", tuple(reduced))
        object.__setattr__(self, "u", check_unit(self.u, self.n))
        object.__setattr__(self, "moduli", tuple(self.n // gcd(self.n, e) for e in reduced))

    def solutions(self) -> list[int]:
        return [l for l in range(self.n) if all((l - self.u) % a == 0 for a in self.moduli)]


def determined_exponent_modulus(n: int, k: Sequence[int]) -> int:
    """lcm of the inertia orders ``n / gcd(n, k_i)``."""
    return lcm(*(n // gcd(n, e) for e in _reduced(n, k)))


def inertia_exponent_solutions(n: int, k: Sequence[int], u: int) -> list[int]:
    """Residues ``l`` mod ``n`` satisfying every branch-point congruence, ascending."""
    return ExponentConstraintSystem(n, tuple(k), u).solutions()


@dataclass
class OrbitEntry:
    label: ComponentLabel
    strata: list[BranchingDatum]
    # unit -> permutation of strata indices
    action: dict[int, tuple[int, ...]]
    stabilizer_size: int


def twist_orbit_report(atlas: Sequence[ComponentLabel]) -> list[OrbitEntry]:
    """How each unit permutes the strata lying over each label.

    Raises :class:`ConsistencyFailure` if a twist leaves a label's orbit or
    moves a canonical representative.
    """
    report = []
    for label in atlas:
        kr = label.canonical_kr
        n = label.n
        strata = sorted(unit_orbit(kr), key=BranchingDatum.sort_key)
        index = {s: j for j, s in enumerate(strata)}
        action = {}
        for u in units(n):
            perm = []
            for s in strata:
                t = unit_twist(s, u)
                if t not in index:
                    raise ConsistencyFailure(
                        f"unit {u} sends {s} outside the orbit of {kr}",
                        counterexample={"label": kr, "stratum": s, "unit": u},
                    )
                perm.append(index[t])
            if canonicalize(unit_twist(kr, u)) != kr:
                raise ConsistencyFailure(
                    f"unit {u} moves the canonical class of {kr}",
                    counterexample={"label": kr, "unit": u},
                )
            action[u] = tuple(perm)
        # stabilizer of the canonical representative
        stab = sum(1 for u in units(n) if unit_twist(kr, u) == kr)
        if len(strata) != label.aut_orbit_size or stab * len(strata) != totient(n):
            raise ConsistencyFailure(
                f"orbit-stabilizer fails for {kr}: orbit {len(strata)}, stabilizer {stab}",
                counterexample={"label": kr},
            )
        report.append(OrbitEntry(label, strata, action, stab))
    return report
