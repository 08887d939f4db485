from math import gcd

import pytest

from cyclic_loci.enumeration import enumerate_components
from cyclic_loci.errors import EmptyInertia, InvalidDatum, NotAUnit
from cyclic_loci.galois import (
    ExponentConstraintSystem,
    determined_exponent_modulus,
    inertia_exponent_solutions,
    twist_orbit_report,
)
from cyclic_loci.hurwitz import BranchingDatum, HurwitzDatum, make_label


def test_modulus_examples():
    assert determined_exponent_modulus(7, [2, 2, 3]) == 7
    assert determined_exponent_modulus(4, [2, 2]) == 2
    assert determined_exponent_modulus(12, [4, 6, 6, 8]) == 6
    assert 12 // gcd(12, 4, 6, 6, 8) == 6


def test_modulus_rejects_empty_and_zero():
    with pytest.raises(EmptyInertia):
        determined_exponent_modulus(5, [])
    with pytest.raises(InvalidDatum):
        determined_exponent_modulus(5, [5, 1])


def _brute_solutions(n, k, u):
    orders = [n // gcd(n, e) for e in k]
    return [l for l in range(n) if all(l % a == u % a for a in orders)]


@pytest.mark.parametrize(
    "n, k, u, expected",
    [(7, [2, 2, 3], 3, [3]), (4, [2, 2], 1, [1, 3]), (12, [4, 6, 6, 8], 5, [5, 11])],
)
def test_solution_examples(n, k, u, expected):
    assert _brute_solutions(n, k, u) == expected
    assert inertia_exponent_solutions(n, k, u) == expected


def test_solutions_reject_non_unit():
    with pytest.raises(NotAUnit):
        inertia_exponent_solutions(4, [2, 2], 2)


def test_constraint_system_moduli():
    system = ExponentConstraintSystem(12, (4, 6, 6, 8), 5)
    assert system.moduli == (3, 2, 2, 3)
    assert all(12 % a == 0 and a >= 2 for a in system.moduli)


def test_solutions_need_not_be_units():
    # only u itself is guaranteed: here l = 4 also satisfies l = 1 (mod 3)
    sols = inertia_exponent_solutions(6, [2, 4], 1)
    assert sols == [1, 4]
    assert gcd(4, 6) != 1


def test_orbit_report_examples():
    report = twist_orbit_report(enumerate_components(2, 0, 2))
    assert [(len(e.strata), e.stabilizer_size) for e in report] == [(1, 1), (1, 1)]

    sym = make_label(4, 0, 0, BranchingDatum.unmarked(HurwitzDatum(5, (1, 2, 3, 4))))
    (entry,) = twist_orbit_report([sym])
    assert (len(entry.strata), entry.stabilizer_size) == (1, 4)

    kr = BranchingDatum.from_sparse(HurwitzDatum(7, (1, 1, 5)), {5: 1, 0: 1})
    (entry,) = twist_orbit_report([make_label(3, 8, 0, kr)])
    assert (len(entry.strata), entry.stabilizer_size) == (6, 1)
    # each unit acts as a permutation of the six strata
    for perm in entry.action.values():
        assert sorted(perm) == list(range(6))
