import random
from fractions import Fraction

from hypothesis import given, strategies as st

from kzduality.ratfunc import ONE, Q, T, ZERO
from kzduality.tboson import K, PHI, PHIDAG, nf_mul, normal_form, numeric_trace, trace

letters = st.lists(st.sampled_from([PHI, K, PHIDAG]), max_size=6)


def test_rewriting_rules():
    assert normal_form([PHI, PHIDAG]) == {(0, 0, 0): ONE, (0, 1, 0): -T}
    assert normal_form([PHIDAG, PHI]) == {(0, 0, 0): ONE, (0, 1, 0): -ONE}
    assert normal_form([K, PHI]) == {(0, 1, 1): ONE}
    assert normal_form([PHI, K]) == {(0, 1, 1): T}
    assert normal_form([K, PHIDAG]) == {(1, 1, 0): T}


def test_trace_examples():
    assert trace(normal_form([])) == ONE / (ONE - Q)
    assert trace(normal_form([PHIDAG, PHI])) == ONE / (ONE - Q) - ONE / (ONE - Q * T)
    assert trace(normal_form([PHI])) == ZERO


@given(letters, letters, letters)
def test_normal_form_associative(a, b, c):
    x, y, z = normal_form(a), normal_form(b), normal_form(c)
    assert nf_mul(nf_mul(x, y), z) == nf_mul(x, nf_mul(y, z))
    assert nf_mul(x, y) == normal_form(a + b)


@given(letters)
def test_commutation_phi_phidag(w):
    """phi phi^dag - t phi^dag phi = 1 - t holds inside any word."""
    lhs = normal_form(w + [PHI, PHIDAG])
    rhs = normal_form(w + [PHIDAG, PHI])
    diff = dict(lhs)
    for k, v in rhs.items():
        diff[k] = diff.get(k, ZERO) - T * v
    expected = normal_form(w)
    assert {k: v for k, v in diff.items() if v} == {k: v * (ONE - T) for k, v in expected.items()}


def test_trace_matches_truncated_matrices():
    rng = random.Random(3)
    q, t = Fraction(1, 5), Fraction(1, 3)
    for _ in range(15):
        w = [rng.choice([PHI, K, PHIDAG]) for _ in range(rng.randint(0, 5))]
        exact = trace(normal_form(w)).evaluate(q, t)
        approx = numeric_trace(w, q, t, size=30)
        assert abs(exact - approx) < Fraction(1, 10 ** 15)
