from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from orext import (
    DerivationSpec,
    Poly,
    SkewPoly,
    chain_certificate,
    d_apply,
    essentialize,
    from_right_form,
    maximality_certificate,
    membership_I,
    module_action,
    reduce_mod_Sm,
    right_divide,
    right_normal_form,
    sigma_apply,
    skew_mul,
)

from oracles import right_form_binomial, theta_pow_times

small = st.fractions(min_value=-5, max_value=5, max_denominator=3)
units = small.filter(bool)
polys = st.lists(small, max_size=4).map(Poly)

X = Poly.x()
WEYL = DerivationSpec.ordinary(1)
X2 = DerivationSpec.ordinary(Poly({2: 1}))


def sk(spec, *coeffs):
    return SkewPoly(coeffs, spec)


@st.composite
def specs(draw, identity=False):
    dx = draw(st.lists(small, max_size=3).map(Poly))
    if identity or draw(st.booleans()):
        return DerivationSpec.ordinary(dx)
    return DerivationSpec(draw(units), draw(small), dx)


@st.composite
def skews(draw, spec, max_tdeg=3):
    return SkewPoly(draw(st.lists(polys, max_size=max_tdeg + 1)), spec)


@st.composite
def triples(draw, identity=False):
    spec = draw(specs(identity))
    return spec, draw(skews(spec)), draw(skews(spec)), draw(skews(spec))


# -- multiplication ---------------------------------------------------------


def test_theta_x_weyl():
    theta = SkewPoly.theta(WEYL)
    assert skew_mul(theta, sk(WEYL, X)) == sk(WEYL, 1, X)


def test_theta_squared_x():
    assert SkewPoly.theta(WEYL, 2) * X == sk(WEYL, 0, 2, X)


@pytest.mark.parametrize("q", [Fraction(3), Fraction(-1, 2)])
def test_theta_x_quantum_plane(q):
    spec = DerivationSpec(q, 0, 0)
    assert SkewPoly.theta(spec) * X == sk(spec, 0, Poly({1: q}))


def test_mismatched_specs():
    with pytest.raises(ValueError):
        skew_mul(SkewPoly.theta(WEYL), SkewPoly.theta(X2))


@given(triples())
def test_ring_axioms(t):
    spec, f, g, h = t
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert (f + g) * h == f * h + g * h
    one = SkewPoly([1], spec)
    assert one * f == f == f * one


@given(specs())
def test_defining_relation(spec):
    theta = SkewPoly.theta(spec)
    for a in (X, Poly([1, 2, 3])):
        assert theta * a == sk(spec, d_apply(spec, a), sigma_apply(spec, a))


@given(st.lists(small, max_size=5).map(Poly), st.integers(0, 6), st.lists(small, max_size=3).map(Poly))
def test_theta_power_binomial(a, n, dx):
    spec = DerivationSpec.ordinary(dx)
    assert SkewPoly.theta(spec, n) * a == SkewPoly(theta_pow_times(dx, a, n), spec)


# -- right normal form ------------------------------------------------------


def test_right_form_constant():
    assert right_normal_form(sk(WEYL, Poly([2, 1]))) == [Poly([2, 1])]


def test_right_form_x_theta():
    assert right_normal_form(sk(WEYL, 0, X)) == [Poly.constant(-1), X]


def test_right_form_x_theta_squared():
    assert right_normal_form(sk(WEYL, 0, 0, X)) == [Poly(), Poly.constant(-2), X]


@given(st.lists(small, max_size=3).map(Poly).flatmap(lambda dx: st.tuples(st.just(dx), st.lists(polys, max_size=5))))
def test_right_form_matches_alternating_formula(args):
    dx, coeffs = args
    f = SkewPoly(coeffs, DerivationSpec.ordinary(dx))
    got = right_normal_form(f)
    while got and not got[-1]:
        got.pop()
    assert got == right_form_binomial(dx, list(f.coeffs))


@given(specs().flatmap(lambda s: skews(s)))
def test_right_form_round_trip(f):
    assert from_right_form(right_normal_form(f), f.spec) == f


# -- division ---------------------------------------------------------------


def test_divide_exact():
    g = (SkewPoly.theta(WEYL) + X) * SkewPoly.theta(WEYL)
    f = sk(WEYL, 0, X, 1)
    q, r = right_divide(f, g)
    assert q == SkewPoly([1], WEYL) and not r


def test_divide_degree_guard():
    f = sk(WEYL, X, 1)
    q, r = right_divide(f, SkewPoly.theta(WEYL, 2))
    assert not q and r == f


def test_divide_theta_cubed():
    theta = SkewPoly.theta(WEYL)
    g = theta * theta + sk(WEYL, 0, X)
    f = theta**3
    q, r = right_divide(f, g)
    assert q * g + r == f
    assert r.degree <= 1


def test_divide_needs_unit_leading_coefficient():
    with pytest.raises(ValueError):
        right_divide(SkewPoly.theta(WEYL, 3), sk(WEYL, 0, X))
    with pytest.raises(ZeroDivisionError):
        right_divide(SkewPoly.theta(WEYL), SkewPoly([], WEYL))


@st.composite
def division_pairs(draw):
    spec = draw(specs())
    f = draw(skews(spec, 4))
    lower = draw(st.lists(polys, max_size=3))
    g = SkewPoly(lower + [Poly.constant(draw(units))], spec)
    return f, g


@given(division_pairs())
def test_division_reconstructs(pair):
    f, g = pair
    q, r = right_divide(f, g)
    assert q * g + r == f
    assert not r or r.degree < g.degree


# -- module action ----------------------------------------------------------


def test_module_action_examples():
    assert module_action(SkewPoly.theta(WEYL), Poly({2: 1})) == Poly({1: 2})
    assert module_action(sk(WEYL, 0, 0, X), Poly({3: 1})) == Poly({2: 6})
    p = Poly([1, -1, 4])
    assert module_action(sk(WEYL, 5), p) == p * 5


def test_module_action_needs_identity_sigma():
    spec = DerivationSpec(2, 0, 1)
    with pytest.raises(ValueError):
        module_action(SkewPoly.theta(spec), X)


@given(specs(identity=True).flatmap(lambda s: st.tuples(skews(s, 2), skews(s, 2))), polys)
def test_module_action_is_an_action(fg, p):
    f, g = fg
    assert module_action(f * g, p) == module_action(f, module_action(g, p))
    assert module_action(f + g, p) == module_action(f, p) + module_action(g, p)


# -- reduction modulo S*m and membership in I --------------------------------


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1), Fraction(-3, 2)])
def test_reduce_examples(alpha):
    m = Poly([-alpha, 1])
    assert not any(reduce_mod_Sm(sk(X2, m), alpha))
    assert not any(reduce_mod_Sm(SkewPoly.theta(X2) * m, alpha))
    assert reduce_mod_Sm(sk(X2, 1), alpha) == (1,)


def test_membership_examples():
    m = Poly([-1, 1])
    theta = SkewPoly.theta(X2)
    assert membership_I(sk(X2, 0, m), 1)
    assert not membership_I(theta, 1)
    assert membership_I(theta * m * theta, 1)
    assert not membership_I(sk(X2, 1), 1)


@given(st.lists(polys, max_size=3), st.lists(polys, max_size=3), small)
def test_reduce_is_left_ideal_compatible(hc, fc, alpha):
    # h*(x - alpha) lies in S*m for every h; adding it never changes coordinates
    spec = DerivationSpec.ordinary(Poly([1, 0, 1]))
    h, f = SkewPoly(hc, spec), SkewPoly(fc, spec)
    g = f + h * Poly([-alpha, 1])
    a, b = reduce_mod_Sm(f, alpha), reduce_mod_Sm(g, alpha)
    n = max(len(a), len(b))
    assert list(a) + [0] * (n - len(a)) == list(b) + [0] * (n - len(b))


# -- essentializer ------------------------------------------------------------


@pytest.mark.parametrize("a", [Poly([3]), Poly([1, 1]), Poly([2, 0, 1])])
def test_essentialize_constant_coefficient(a):
    spec = X2
    w = essentialize(sk(spec, a), 1)
    assert w.multiplier == sk(spec, -d_apply(spec, a), a)
    assert w.product == sk(spec, 0, a * a)
    assert w.verify()


def test_essentialize_already_in_s_theta():
    w = essentialize(SkewPoly.theta(X2), 1)
    assert w.multiplier == SkewPoly([1], X2) and w.verify()


def test_essentialize_x_minus_one():
    u = sk(X2, Poly([-1, 1]))
    w = essentialize(u, 1)
    b = Poly({2: 1})
    theta = SkewPoly.theta(X2)
    assert w.shift_steps == 1
    assert w.multiplier == sk(X2, -d_apply(X2, b), b) * theta
    assert w.verify()
    assert not membership_I(w.product, 1) and not w.product.constant_coefficient


def test_essentialize_errors():
    with pytest.raises(ValueError):
        essentialize(sk(X2, 0, Poly([-1, 1])), 1)  # in I
    with pytest.raises(ValueError):
        essentialize(sk(X2, 1), 0)  # dx(0) = 0


# -- chain certificates --------------------------------------------------------


@pytest.mark.parametrize("dx, k", [(X, 3), (Poly({2: 1}), 2), (Poly([1, 0, 1]), 4)])
def test_chain_certificate(dx, k):
    cert = chain_certificate(dx, 1, k)
    assert cert.verify()
    assert len(cert.links) == k
    assert all(all(link.facts.values()) for link in cert.links)


def test_chain_certificate_errors():
    with pytest.raises(ValueError):
        chain_certificate(1, 0, 3)
    with pytest.raises(ValueError):
        chain_certificate(X, 0, 3)


def test_chain_certificate_tamper_detected():
    cert = chain_certificate(X, 1, 3)
    bad = type(cert)(cert.spec, cert.f, cert.alpha, 4, cert.links, cert.contains_I)
    assert not bad.verify()


# -- maximality ----------------------------------------------------------------


def test_maximality_unit():
    cert = maximality_certificate(1, SkewPoly([1], X2), 0)
    assert cert.cofactor == SkewPoly([1], X2) and cert.search_degree == 0


def test_maximality_x():
    cert = maximality_certificate(1, sk(X2, X), 0)
    assert cert.cofactor == SkewPoly([1], X2)


def test_maximality_theta():
    g = SkewPoly.theta(X2)
    cert = maximality_certificate(1, g, 6)
    assert cert is not None and cert.verify()
    # independent recheck: every right coordinate of u*g - 1 vanishes at x = 1
    residue = cert.cofactor * g - 1
    assert all(c(1) == 0 for c in right_form_binomial(X2.dx, list(residue.coeffs)))


def test_maximality_rejects_members():
    with pytest.raises(ValueError):
        maximality_certificate(1, sk(X2, Poly([-1, 1])), 4)
