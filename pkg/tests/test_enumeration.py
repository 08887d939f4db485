import pytest

from cyclic_loci.enumeration import (
    enumerate_components,
    enumerate_hurwitz_data,
    enumerate_markings,
    enumerate_strata,
)
from cyclic_loci.errors import NotHyperbolic
from cyclic_loci.hurwitz import HurwitzDatum, label_violations
from cyclic_loci.monodromy import oracle_enumerate


def _pairs(data):
    return [(gp, k.exponents) for gp, k in data]


def test_hurwitz_data_examples():
    assert _pairs(enumerate_hurwitz_data(2, 2)) == [(0, (1,) * 6), (1, (1, 1))]
    assert _pairs(enumerate_hurwitz_data(0, 2)) == [(0, (1, 1))]
    assert _pairs(enumerate_hurwitz_data(3, 2)) == [(0, (1,) * 8), (1, (1,) * 4), (2, ())]


def test_hurwitz_data_order_is_deterministic():
    data = _pairs(enumerate_hurwitz_data(4, 6))
    assert data == sorted(data)


def test_markings_examples():
    assert enumerate_markings(HurwitzDatum(2, (1, 1)), 4) == [(2, 0), (1, 2)]
    assert enumerate_markings(HurwitzDatum(5, (1, 4)), 0) == [(0,) * 5]
    assert enumerate_markings(HurwitzDatum(2, ()), 1) == []


def test_components_examples():
    labels = enumerate_components(2, 0, 2)
    assert len(labels) == 2
    assert all(lab.etale_part == 1 and lab.psi_degree == 1 and lab.aut_orbit_size == 1 for lab in labels)

    (lab,) = enumerate_components(1, 1, 2)
    assert (lab.g_prime, lab.canonical_kr.k.exponents, lab.canonical_kr.r) == (0, (1,) * 4, (0, 1))
    assert lab.psi_degree == 4

    assert len(enumerate_components(3, 0, 2)) == 3
    filtered = enumerate_components(3, 0, 2, no_etale_only=True)
    assert len(filtered) == 2
    assert all(lab.g_prime < 2 for lab in filtered)


def test_components_require_hyperbolic():
    with pytest.raises(NotHyperbolic):
        enumerate_components(0, 2, 2)


@pytest.mark.parametrize("g, m, n", [(2, 1, 6), (3, 2, 4), (1, 3, 5), (0, 5, 3), (4, 0, 8)])
def test_components_match_oracle(g, m, n):
    labels = enumerate_components(g, m, n)
    assert set(labels) == oracle_enumerate(g, m, n)
    assert labels == sorted(labels, key=lambda lab: lab.sort_key())
    for lab in labels:
        assert label_violations(lab) == []
    assert len(enumerate_strata(g, m, n)) == sum(lab.aut_orbit_size for lab in labels)


def test_repeated_runs_identical():
    assert enumerate_components(4, 2, 6) == enumerate_components(4, 2, 6)
