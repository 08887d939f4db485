"""Kummer covers ``w^n = alpha`` of the projective line.

Points are opaque string labels; ``"inf"`` is the point at infinity.  A
divisor is the divisor of the rational function ``alpha``: distinct labels,
nonzero multiplicities, total degree zero.  The branch points are the
support points whose multiplicity is nonzero mod ``n`` and the local
exponent there is the multiplicity mod ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import factorial
from typing import Iterable

from .errors import DivisorError, InvalidMarking
from .hurwitz import BranchingDatum, HurwitzDatum, check_order, check_unit

INFINITY = "inf"


@dataclass(frozen=True)
class KummerDivisor:
    n: int
    support: tuple[tuple[str, int], ...]

    def __post_init__(self):
        check_order(self.n)
        support = tuple((str(p), int(c)) for p, c in self.support)
        object.__setattr__(self, "support", support)
        labels = [p for p, _ in support]
        if len(set(labels)) != len(labels):
            raise DivisorError(f"repeated point labels in {labels}")
        if any(c == 0 for _, c in support):
            raise DivisorError("multiplicities must be nonzero")
        if sum(c for _, c in support):
            raise DivisorError(f"divisor has degree {sum(c for _, c in support)}, expected 0")

    def multiplicity(self, label: str) -> int:
        return dict(self.support).get(label, 0)

    def scaled(self, u: int) -> KummerDivisor:
        """Divisor of ``alpha**u``."""
        return KummerDivisor(self.n, tuple((p, u * c) for p, c in self.support))


def parse_divisor(n: int, text: str) -> KummerDivisor:
    """Parse ``"1:3,-1:2,inf:-5"``; the last colon separates label from multiplicity."""
    pairs = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        label, sep, mult = item.rpartition(":")
        if not sep or not label.strip():
            raise DivisorError(f"expected label:multiplicity, got {item!r}")
        try:
            pairs.append((label.strip(), int(mult)))
        except ValueError:
            raise DivisorError(f"multiplicity {mult!r} is not an integer") from None
    return KummerDivisor(n, tuple(pairs))


def format_divisor(d: KummerDivisor) -> str:
    return ",".join(f"{p}:{c}" for p, c in d.support)


def branch_data(d: KummerDivisor) -> tuple[list[tuple[str, int]], HurwitzDatum]:
    """Branch points with their exponents (in support order) and the datum."""
    points = [(p, c % d.n) for p, c in d.support if c % d.n]
    return points, HurwitzDatum(d.n, tuple(sorted(e for _, e in points)))


def marking_vector(d: KummerDivisor, marked: Iterable[str]) -> BranchingDatum:
    """Branching datum of the divisor ``pi^{-1}(marked)``.

    Each marked quotient point contributes to ``r[e]`` where ``e`` is its
    exponent; points outside the branch locus contribute to ``r[0]``.
    """
    marked = list(marked)
    if len(set(marked)) != len(marked):
        raise InvalidMarking(f"repeated marked points in {marked}")
    _, k = branch_data(d)
    r = [0] * d.n
    for label in marked:
        r[d.multiplicity(label) % d.n] += 1
    return BranchingDatum(k, tuple(r))


def realize_hurwitz(n: int, k: HurwitzDatum) -> KummerDivisor:
    """A divisor on the line whose cover has Hurwitz datum ``k``.

    Affine points ``q1, q2, ...`` carry the exponents themselves; the pole
    at infinity balances the degree, and since the exponents sum to a
    multiple of ``n`` infinity is unbranched.
    """
    check_order(n)
    if k.n != n:
        raise ValueError(f"datum is over Z/{k.n}, not Z/{n}")
    support = [(f"q{j}", e) for j, e in enumerate(k.exponents, start=1)]
    if support:
        support.append((INFINITY, -sum(k.exponents)))
    return KummerDivisor(n, tuple(support))


@dataclass(frozen=True)
class GenericOrbitModel:
    """Branch points of a generic cover grouped into Galois orbits.

    ``blocks[i]`` lists the branch points of exponent ``i``; for a generic
    cover each block is one orbit with full symmetric Galois group, and
    the blocks are independent of each other.
    """

    k: HurwitzDatum
    blocks: dict[int, tuple[str, ...]]

    @classmethod
    def generic(cls, k: HurwitzDatum) -> GenericOrbitModel:
        blocks: dict[int, list[str]] = {}
        for j, e in enumerate(k.exponents, start=1):
            blocks.setdefault(e, []).append(f"y{j}")
        return cls(k, {e: tuple(pts) for e, pts in sorted(blocks.items())})


def generic_galois_group_order(k: HurwitzDatum) -> int:
    order = 1
    for size in k.counts().values():
        order *= factorial(size)
    return order


def stratum_fiber_count(kr: BranchingDatum) -> int:
    """Count the ways to mark ``r[i]`` branch points of each exponent ``i``.

    Enumerates the choices explicitly rather than multiplying binomials.
    """
    model = GenericOrbitModel.generic(kr.k)
    per_block = []
    for i in range(1, kr.n):
        block = model.blocks.get(i, ())
        if kr.r[i] > len(block):
            raise InvalidMarking(f"r[{i}] = {kr.r[i]} > {len(block)}")
        per_block.append(list(combinations(block, kr.r[i])))
    return sum(1 for _ in product(*per_block))


def twisted_branch_data(d: KummerDivisor, u: int) -> HurwitzDatum:
    """Hurwitz datum of ``alpha**u`` (used to check twist compatibility)."""
    check_unit(u, d.n)
    return branch_data(d.scaled(u))[1]
