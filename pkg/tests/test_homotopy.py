import pytest

from waci.derivations import tensor_presentation
from waci.families import SplitParams, eisenbud_levine, flag_presentation, split_family, truncated
from waci.homotopy import (
    LinearPartError,
    NotWACIError,
    TrivialAlgebraError,
    is_simple,
    k_invariant,
    linear_part_matrix,
    minimal_generators_in_degree,
    pi0,
    pi1,
    pseudo_homotopy,
)
from waci.linalg import rank
from waci.poly import Presentation, linear_part

EL3 = eisenbud_levine(3)
SPLIT21 = split_family(SplitParams(2, 1, (2, 2), (2, 2)))
FLAG = flag_presentation(2)
X3 = truncated(3, 2)

NO_LINEAR = [
    EL3,
    eisenbud_levine(4),
    SPLIT21,
    split_family(SplitParams(3, 1, (2, 4, 2), (4, 2, 4))),
    split_family(SplitParams(2, 2, (2, 6), (6, 2))),
    X3,
    truncated(4, 4),
]


def test_pi1_examples():
    assert pi1(EL3) == {3: 2, 5: 1}
    assert pi1(SPLIT21) == {3: 1, 7: 1}
    assert pi1(FLAG) == {3: 1, 5: 1}
    assert pi1(X3) == {5: 1}


@pytest.mark.parametrize("n,k,w,a", [(2, 1, (2, 2), (2, 2)), (3, 1, (2, 4, 2), (4, 2, 4)), (2, 2, (2, 6), (6, 2))])
def test_split_pi1_shape(n, k, w, a):
    params = SplitParams(n, k, w, a)
    d = params.d
    assert pi1(split_family(params)) == {d - 1: n - 1, 2 * k * d - 1: 1}


def test_pi0_examples():
    assert pi0(X3) == {2: 1}
    assert pi0(FLAG) == {2: 2}
    for n in (3, 4):
        assert pi0(eisenbud_levine(n)) == {2: n}


def test_k_invariant_examples():
    assert k_invariant(EL3) == 3
    assert k_invariant(SPLIT21) == 4
    assert k_invariant(X3) == 3
    q = Presentation.from_strings(["x"], [2], ["x"])
    with pytest.raises(TrivialAlgebraError):
        k_invariant(q)


def test_not_waci_is_an_error():
    bad = Presentation.from_strings(["x", "y"], [2, 2], ["x^2", "x*y"])
    with pytest.raises(NotWACIError):
        pi1(bad)
    assert not is_simple(bad).is_waci


def test_simplicity_verdicts():
    assert is_simple(EL3).simple
    assert is_simple(eisenbud_levine(4)).simple
    for p in NO_LINEAR[2:5]:
        assert is_simple(p).simple, p
    r = is_simple(tensor_presentation(X3, truncated(3, 2, "y")))
    assert not r.simple and r.der0_dim == 2 and r.verdict.startswith("fails (ii)")


def test_tensor_never_simple():
    for a in (X3, EL3):
        for b in (truncated(4, 2, "y"), SPLIT21):
            r = is_simple(tensor_presentation(a, b))
            assert r.der_neg_zero and r.der0_dim == 2 and not r.simple


def test_minimal_generators_examples():
    assert minimal_generators_in_degree(EL3, 6) == 1
    assert minimal_generators_in_degree(EL3, 4) == 2
    with pytest.raises(LinearPartError):
        minimal_generators_in_degree(FLAG, 4)


@pytest.mark.parametrize("p", NO_LINEAR, ids=lambda p: p.label or str(p))
def test_minimal_generators_match_pi1(p):
    odd = pi1(p)
    top = max(p.relation_degrees)
    for d in range(2, top + 1, 2):
        assert minimal_generators_in_degree(p, d) == odd.get(d - 1, 0)


@pytest.mark.parametrize("p", NO_LINEAR + [FLAG, flag_presentation(3)], ids=str)
def test_rank_identities(p):
    L = linear_part_matrix(p)
    r = rank(L, len(p.relations))
    h = pseudo_homotopy(p)
    assert h.rank_L == r
    assert sum(h.pi1.values()) == len(p.relations) - r
    assert sum(h.pi0.values()) == p.ring.nvars - r
    if not any(linear_part(f) for f in p.relations):
        assert sorted(d for d, c in h.pi1.items() for _ in range(c)) == sorted(f - 1 for f in p.relation_degrees)
        assert sorted(d for d, c in h.pi0.items() for _ in range(c)) == sorted(p.ring.weights)
