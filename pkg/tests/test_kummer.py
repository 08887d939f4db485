from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclic_loci.errors import DivisorError, InvalidMarking
from cyclic_loci.hurwitz import BranchingDatum, HurwitzDatum, psi_degree, unit_twist, units
from cyclic_loci.kummer import (
    INFINITY,
    GenericOrbitModel,
    KummerDivisor,
    branch_data,
    generic_galois_group_order,
    marking_vector,
    parse_divisor,
    realize_hurwitz,
    stratum_fiber_count,
    twisted_branch_data,
)


def test_branch_data_worked_example():
    d = parse_divisor(7, "1:3,-1:2,inf:-5")
    points, k = branch_data(d)
    assert points == [("1", 3), ("-1", 2), (INFINITY, 2)]
    assert k.exponents == (2, 2, 3)
    assert sorted(e % 7 for e in (3, 2, -5)) == list(k.exponents)


def test_branch_locus_strictly_inside_support():
    points, k = branch_data(parse_divisor(7, "0:7,inf:-7"))
    assert points == []
    assert k.exponents == ()


def test_hyperelliptic_divisor():
    d = KummerDivisor(2, tuple((f"p{j}", 1) for j in range(1, 7)) + ((INFINITY, -6),))
    points, k = branch_data(d)
    assert [p for p, _ in points] == [f"p{j}" for j in range(1, 7)]
    assert k.exponents == (1,) * 6


def test_infinity_branched_when_odd():
    points, k = branch_data(parse_divisor(2, "1:1,inf:-1"))
    assert [p for p, _ in points] == ["1", INFINITY]
    assert k.exponents == (1, 1)


@pytest.mark.parametrize(
    "text",
    ["1:3,1:-3", "1:3,2:-2", "1:0,2:0", "1-3", "1:x,2:-1", ":1,2:-1"],
)
def test_parse_divisor_rejects(text):
    with pytest.raises(DivisorError):
        parse_divisor(7, text)


def test_realize_hurwitz_examples():
    d = realize_hurwitz(7, HurwitzDatum(7, (2, 2, 3)))
    assert d.support == (("q1", 2), ("q2", 2), ("q3", 3), (INFINITY, -7))
    assert branch_data(d)[1] == HurwitzDatum(7, (2, 2, 3))
    assert realize_hurwitz(2, HurwitzDatum(2, (1, 1))).support == (("q1", 1), ("q2", 1), (INFINITY, -2))
    assert realize_hurwitz(5, HurwitzDatum(5, ())).support == ()


@st.composite
def hurwitz_data(draw):
    n = draw(st.integers(2, 16))
    exps = draw(st.lists(st.integers(1, n - 1), max_size=7))
    if -sum(exps) % n:
        exps.append(-sum(exps) % n)
    return HurwitzDatum(n, tuple(sorted(exps)))


@given(hurwitz_data())
def test_realize_round_trip(k):
    d = realize_hurwitz(k.n, k)
    points, back = branch_data(d)
    assert back == k
    assert INFINITY not in [p for p, _ in points]


@given(hurwitz_data(), st.data())
def test_scaling_divisor_is_unit_twist(k, data):
    u = data.draw(st.sampled_from(units(k.n)))
    d = realize_hurwitz(k.n, k)
    assert twisted_branch_data(d, u) == unit_twist(BranchingDatum.unmarked(k), u).k


def test_generic_galois_group_order():
    assert generic_galois_group_order(HurwitzDatum(7, (2, 2, 3))) == 2
    assert generic_galois_group_order(HurwitzDatum(7, ())) == 1
    assert generic_galois_group_order(HurwitzDatum(2, (1,) * 6)) == 720


def test_generic_orbit_blocks():
    model = GenericOrbitModel.generic(HurwitzDatum(7, (2, 2, 3)))
    assert {i: len(b) for i, b in model.blocks.items()} == {2: 2, 3: 1}
    all_points = [p for b in model.blocks.values() for p in b]
    assert len(all_points) == len(set(all_points)) == 3


def test_stratum_fiber_count_examples():
    kr = BranchingDatum.from_sparse(HurwitzDatum.from_residues(7, (3, 2, -5)), {3: 1, 0: 1})
    assert stratum_fiber_count(kr) == psi_degree(kr) == 1
    assert stratum_fiber_count(BranchingDatum(HurwitzDatum(3, (1, 2)), (4, 0, 0))) == 1
    kr = BranchingDatum(HurwitzDatum(2, (1, 1, 1, 1)), (0, 2))
    assert len(list(combinations(range(4), 2))) == 6
    assert stratum_fiber_count(kr) == psi_degree(kr) == 6


def test_marking_vector_worked_example():
    d = parse_divisor(7, "1:3,-1:2,inf:-5")
    kr = marking_vector(d, ["1", "2"])
    assert kr.r == (1, 0, 0, 1, 0, 0, 0)
    with pytest.raises(InvalidMarking):
        marking_vector(d, ["1", "1"])
