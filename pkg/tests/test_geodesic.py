from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from waci.derivations import tensor_presentation
from waci.families import SplitParams, eisenbud_levine, split_family, truncated
from waci.geodesic import (
    MonomialAction,
    char_poly,
    char_poly_from_cycles,
    dense_char_poly,
    gamma_integrality,
    gauss_lemma_sweep,
    geodesic_report,
    unimodular_pair_exists,
    unimodular_search,
)
from waci.homotopy import k_invariant

EL3 = eisenbud_levine(3)
SPLIT21 = split_family(SplitParams(2, 1, (2, 2), (2, 2)))


@st.composite
def actions(draw, max_size=5):
    s = draw(st.integers(1, max_size))
    sigma = draw(st.permutations(range(s)))
    lam = [draw(st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(bool)) for _ in range(s)]
    return MonomialAction(tuple(sigma), tuple(lam))


def test_char_poly_examples():
    c = char_poly(MonomialAction((1, 0), (2, 3)))
    assert c.coefficients == (-6, 0, 1)
    assert c.at_zero == -6 and c.at_one == -5
    c = char_poly(MonomialAction((0,), (1,)))
    assert c.coefficients == (-1, 1) and c.at_one == 0
    with pytest.raises(ValueError):
        MonomialAction((0, 0), (1, 1))


def test_gamma_integrality_examples():
    c = char_poly_from_cycles((1, 1), (Fraction(1, 2), 2))
    assert c.coefficients == (1, Fraction(-5, 2), 1)
    assert not c.is_integral() and gamma_integrality(c)
    c = char_poly_from_cycles((2, 1), (6, 2))
    assert c.is_integral() and gamma_integrality(c)


@settings(max_examples=150, deadline=None)
@given(actions())
def test_char_poly_matches_dense_oracle(act):
    c = char_poly(act)
    assert c.coefficients == dense_char_poly(act.matrix())
    m = len(act.cycles())
    assert c.at_zero == (-1) ** m * prod(c.gammas)
    assert c.at_one == prod(1 - g for g in c.gammas)
    assert sum(c.cycle_lengths) == act.size


def test_gauss_lemma_sweep_has_no_alarms():
    cases, alarms = gauss_lemma_sweep(max_size=3, max_den=4, max_num=4)
    assert cases > 10000 and alarms == 0


@pytest.mark.parametrize("bounds", [(1, 1), (4, 10), (6, 50)])
def test_no_unimodular_pair(bounds):
    assert not unimodular_pair_exists(*bounds)


def test_unpruned_search_agrees():
    r = unimodular_search(3, 4, max_cycle_length=2, prune=False)
    assert r.found is None and r.examined > 0
    assert not unimodular_pair_exists(3, 6, max_cycle_length=3)


def test_report_examples():
    r = geodesic_report([EL3])
    assert r.obstruction_applies and r.k == 3 and r.critical == (0,)
    r = geodesic_report([EL3, SPLIT21])
    assert r.k == 4 and r.critical == (1,)
    assert r.k == max(k_invariant(p) for p in (EL3, SPLIT21))
    bad = tensor_presentation(truncated(3, 2), truncated(3, 2, "y"))
    r = geodesic_report([bad])
    assert not r.obstruction_applies and "not simple" in r.conclusion
    assert geodesic_report([]).k is None
