from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from orext import (
    DerivationSpec,
    NormalFormKind,
    Poly,
    Reason,
    SkewPoly,
    chain_certificate,
    d_primitive_witness,
    decide_diamond,
    is_locally_nilpotent_uni,
    normalize,
    root_of_unity_order,
    sigma_order,
    zeta,
)

from oracles import sigma_power

small = st.fractions(min_value=-5, max_value=5, max_denominator=3)
units = small.filter(bool)
dxs = st.lists(small, max_size=5).map(Poly)
Q_VALUES = [Fraction(2), Fraction(-1), Fraction(1, 2), zeta(3), zeta(4), zeta(5, 2), zeta(6), zeta(3) + 1, zeta(4) + 1]


def brute_sigma_order(q, b, limit=40):
    for n in range(1, limit + 1):
        if sigma_power(q, b, n) == Poly.x():
            return n
    return None


@pytest.mark.parametrize("q, b, expected", [(1, 0, 1), (1, 3, None), (-1, 5, 2)])
def test_sigma_order_examples(q, b, expected):
    assert sigma_order(Fraction(q), Fraction(b)) == expected


@pytest.mark.parametrize("q", Q_VALUES)
@pytest.mark.parametrize("b", [Fraction(0), Fraction(7, 2)])
def test_sigma_order_against_composition(q, b):
    assert sigma_order(q, b) == brute_sigma_order(q, b)


def test_minus_one_composition_oracle():
    # sigma^2(x) = q^2 x + (q + 1) b
    assert sigma_power(Fraction(-1), Fraction(5), 2) == Poly.x()


def test_normalize_polynomial():
    nf = normalize(DerivationSpec(1, 0, 0))
    assert nf.kind is NormalFormKind.POLYNOMIAL and nf.replay()


def test_normalize_quantum_plane():
    nf = normalize(DerivationSpec(2, 0, 0))
    assert nf.kind is NormalFormKind.QUANTUM_PLANE
    assert nf.q == 2


def test_normalize_quantum_weyl_example():
    spec = DerivationSpec(2, 2, 1)
    nf = normalize(spec)
    assert nf.kind is NormalFormKind.QUANTUM_WEYL
    assert nf.iso.x_new == Poly([2, 1])
    assert nf.iso.p == Poly() and nf.iso.r == 1
    assert nf.iso.y_new == SkewPoly.theta(spec)
    X, Y = SkewPoly([nf.iso.x_new], spec), nf.iso.y_new
    assert Y * X == X * Y * 2 + 1


def test_normalize_diff_op_ring():
    nf = normalize(DerivationSpec.ordinary(Poly({3: 1})))
    assert nf.kind is NormalFormKind.DIFF_OP_RING and nf.replay()


def test_normalize_shift_type():
    spec = DerivationSpec(1, 3, Poly([1, 1]))
    nf = normalize(spec)
    assert nf.kind is NormalFormKind.SHIFT_TYPE
    X, Y = SkewPoly([nf.iso.x_new], spec), nf.iso.y_new
    assert Y * X == (X + 1) * Y


def test_quantum_weyl_with_nonlinear_delta():
    # q = 3, b = 0, dx = x^2 + 5: delta(x') = x'^2 + 5, p = x'/2, r = 5
    spec = DerivationSpec(3, 0, Poly([5, 0, 1]))
    nf = normalize(spec)
    assert nf.kind is NormalFormKind.QUANTUM_WEYL
    assert nf.iso.p == Poly({1: Fraction(1, 2)}) and nf.iso.r == 5
    assert nf.replay()


@st.composite
def specs(draw):
    q = draw(st.sampled_from(Q_VALUES + [Fraction(1)]) | units)
    b = draw(small)
    dx = draw(dxs)
    return DerivationSpec(q, b, dx)


@given(specs())
def test_normalize_always_replays(spec):
    nf = normalize(spec)
    assert nf.replay()
    if spec.q != 1:
        assert nf.kind in (NormalFormKind.QUANTUM_PLANE, NormalFormKind.QUANTUM_WEYL)
        assert (nf.iso.r == 0) == (nf.kind is NormalFormKind.QUANTUM_PLANE)


# -- the diamond decision ---------------------------------------------------


def test_decide_minus_one():
    v = decide_diamond(DerivationSpec(-1, 0, 0))
    assert v.satisfied and v.reason is Reason.ROOT_OF_UNITY and v.reason_text == "RootOfUnity(2)"


def test_decide_two():
    v = decide_diamond(DerivationSpec(2, 0, 0))
    assert not v.satisfied and v.reason is Reason.Q_NOT_ROOT_OF_UNITY


@pytest.mark.parametrize("r", [1, 2, 5])
def test_decide_monomial_derivations(r):
    v = decide_diamond(DerivationSpec.ordinary(Poly({r: 1})))
    assert not v.satisfied and v.reason is Reason.NOT_LOCALLY_NILPOTENT


@pytest.mark.parametrize("lam", [0, 1, Fraction(-7, 3)])
def test_decide_constant_derivations(lam):
    v = decide_diamond(DerivationSpec.ordinary(lam))
    assert v.satisfied and v.reason is Reason.LOCALLY_NILPOTENT


@pytest.mark.parametrize("dx", [Poly(), Poly([1]), Poly.x(), Poly({3: 2})])
def test_decide_infinite_shift(dx):
    spec = DerivationSpec(1, 4, dx)
    v = decide_diamond(spec)
    assert not v.satisfied and v.reason is Reason.INFINITE_ORDER_SHIFT
    assert v.normal_form.kind is NormalFormKind.SHIFT_TYPE
    # K[y'][x'; -y' d/dy'] has a non-locally-nilpotent derivation
    assert not is_locally_nilpotent_uni(DerivationSpec.ordinary(Poly({1: -1})))


def test_decide_zeta3():
    v = decide_diamond(DerivationSpec(zeta(3), 1, Poly.x()))
    assert v.satisfied and v.order == 3


@given(specs())
def test_verdict_characterization(spec):
    v = decide_diamond(spec)
    if spec.q != 1:
        assert v.satisfied == (root_of_unity_order(spec.q) is not None)
    elif spec.b == 0:
        assert v.satisfied == spec.dx.is_constant()
    else:
        assert not v.satisfied


@given(specs(), units)
def test_verdict_invariant_under_rescaling_derivation(spec, c):
    # (sigma, c*d) is isomorphic to (sigma, d) via theta -> c*theta
    scaled = DerivationSpec(spec.q, spec.b, spec.dx * c)
    assert decide_diamond(spec).satisfied == decide_diamond(scaled).satisfied


@settings(max_examples=100)
@given(st.lists(small, max_size=6).map(Poly))
def test_agrees_with_local_nilpotency(dx):
    spec = DerivationSpec.ordinary(dx)
    assert decide_diamond(spec).satisfied == is_locally_nilpotent_uni(spec)


@given(st.lists(small, min_size=2, max_size=6).map(Poly).filter(lambda p: not p.is_constant()))
def test_negative_verdicts_have_chain_witnesses(dx):
    spec = DerivationSpec.ordinary(dx)
    assert not decide_diamond(spec).satisfied
    assert chain_certificate(dx, d_primitive_witness(spec), 3).verify()
