from fractions import Fraction
from itertools import product

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from orext import (
    DerivationSpec,
    LNDKind,
    MPoly,
    MultiDerivation,
    Poly,
    d_apply,
    d_ideal_closure,
    d_primitive_witness,
    is_d_simple,
    is_locally_nilpotent_uni,
    lie_datum,
    lnd_check_multi,
    sigma_apply,
    sigma_inverse_apply,
    verify_lattice_iso_principal,
    zeta,
)

from oracles import lcs_dims_sympy

small = st.fractions(min_value=-6, max_value=6, max_denominator=4)
polys = st.lists(small, max_size=6).map(Poly)
units = small.filter(bool)
XY = ("x", "y")


@st.composite
def specs(draw, identity=False):
    dx = draw(st.lists(small, max_size=4).map(Poly))
    if identity:
        return DerivationSpec.ordinary(dx)
    return DerivationSpec(draw(units), draw(small), dx)


def test_ordinary_derivative():
    assert d_apply(DerivationSpec.ordinary(1), Poly({3: 1})) == Poly({2: 3})


def test_x_squared_derivation_on_x():
    assert d_apply(DerivationSpec.ordinary(Poly({2: 1})), Poly.x()) == Poly({2: 1})


@pytest.mark.parametrize("q", [Fraction(2), Fraction(-1, 3), zeta(5), zeta(3) + 2])
def test_q_derivation_on_x_squared(q):
    # d(x*x) = sigma(x) d(x) + d(x) x = q x + x
    spec = DerivationSpec(q, 0, 1)
    assert d_apply(spec, Poly({2: 1})) == Poly({1: q + 1})


def test_zero_q_rejected():
    with pytest.raises(ValueError):
        DerivationSpec(0, 1, 1)


@given(specs(), polys, polys)
def test_sigma_leibniz(spec, u, v):
    assert d_apply(spec, u * v) == sigma_apply(spec, u) * d_apply(spec, v) + d_apply(spec, u) * v


@given(specs(), polys)
def test_sigma_is_invertible(spec, p):
    assert sigma_inverse_apply(spec, sigma_apply(spec, p)) == p


@given(specs(identity=True), polys)
def test_degree_bound(spec, p):
    dp = d_apply(spec, p)
    assert not dp or dp.degree <= p.degree + spec.dx.degree - 1


@pytest.mark.parametrize("dx, expected", [(5, True), (Poly.x(), False), (0, True), (Poly({2: 1}), False)])
def test_local_nilpotency(dx, expected):
    assert is_locally_nilpotent_uni(DerivationSpec.ordinary(dx)) is expected


def test_local_nilpotency_needs_identity_sigma():
    with pytest.raises(ValueError):
        is_locally_nilpotent_uni(DerivationSpec(2, 0, 1))


def test_ideal_closure_examples():
    f = Poly({2: 1})
    assert d_ideal_closure(f, DerivationSpec.ordinary(f)) == f
    assert d_ideal_closure(Poly({2: 1}), DerivationSpec.ordinary(Fraction(3, 2))) == Poly.constant(1)
    assert d_ideal_closure(Poly([1, 1]), DerivationSpec.ordinary(0)) == Poly([1, 1])
    assert d_ideal_closure(Poly(), DerivationSpec.ordinary(1)) == Poly()


ROOTS = (Fraction(0), Fraction(1), Fraction(-2))


def closure_by_divisors(exps, spec):
    """Largest-degree monic divisor h of g = prod (x - r)^e with h | d(h)."""
    best = None
    for sub in product(*(range(e + 1) for e in exps)):
        h = Poly.constant(1)
        for r, e in zip(ROOTS, sub):
            h = h * Poly([-r, 1]) ** e
        if h.divides(d_apply(spec, h)) and (best is None or h.degree > best.degree):
            best = h
    return best


@given(
    st.tuples(*[st.integers(0, 3)] * 3).filter(any),
    st.tuples(*[st.integers(0, 2)] * 3),
    units,
)
def test_ideal_closure_against_divisor_search(exps, dexps, c):
    g = Poly.constant(1)
    dx = Poly.constant(c)
    for r, e, de in zip(ROOTS, exps, dexps):
        g = g * Poly([-r, 1]) ** e
        dx = dx * Poly([-r, 1]) ** de
    spec = DerivationSpec.ordinary(dx)
    h = d_ideal_closure(g, spec)
    assert h == closure_by_divisors(exps, spec)
    assert h.divides(g) and h.divides(d_apply(spec, h))


@pytest.mark.parametrize("dx, expected", [(1, True), (Poly.x(), False), (0, False), (Fraction(-7), True)])
def test_d_simple(dx, expected):
    assert is_d_simple(DerivationSpec.ordinary(dx)) is expected


@given(st.lists(small, min_size=2, max_size=5).map(Poly).filter(lambda p: not p.is_constant()), units)
def test_d_simple_agrees_with_closure(g, c):
    # under a nonzero constant dx every nonzero ideal closes up to the whole ring
    assert d_ideal_closure(g, DerivationSpec.ordinary(c)) == Poly.constant(1)
    # under dx = g, <g> is a proper d-ideal, so the ring is not d-simple
    assert not is_d_simple(DerivationSpec.ordinary(g))


@pytest.mark.parametrize(
    "dx, alpha", [(Poly.x(), Fraction(1)), (Poly([1, 0, 1]), Fraction(0)), (0, None), (Poly([0, -1, 1]), Fraction(2))]
)
def test_primitive_witness(dx, alpha):
    assert d_primitive_witness(DerivationSpec.ordinary(dx)) == alpha


@given(st.lists(small, min_size=1, max_size=5).map(Poly).filter(bool))
def test_primitive_witness_is_least(dx):
    a = d_primitive_witness(DerivationSpec.ordinary(dx))
    assert dx(a) != 0
    assert all(dx(k) == 0 for k in range(int(a)))


def test_lnd_triangular():
    d = MultiDerivation(XY, [MPoly.var(XY, "y"), MPoly.constant(XY, 1)])
    res = lnd_check_multi(d, 10)
    assert res.kind is LNDKind.TRIANGULAR
    assert res.order == ("y", "x")


def test_lnd_not_nilpotent():
    d = MultiDerivation(("x",), [MPoly.var(("x",), 0)])
    assert lnd_check_multi(d, 10).kind is LNDKind.NOT_NILPOTENT_WITHIN_BOUND


def test_lnd_y_squared():
    y = MPoly.var(XY, "y")
    d = MultiDerivation(XY, [y * y, MPoly(XY)])
    res = lnd_check_multi(d, 5)
    assert res.certified
    # direct iteration: d(x) = y^2, d^2(x) = 0
    assert d(d(MPoly.var(XY, 0))) == MPoly(XY)


def test_lnd_non_triangular():
    # d(x) = x + y is neither triangular nor nilpotent
    x, y = MPoly.var(XY, 0), MPoly.var(XY, 1)
    assert lnd_check_multi(MultiDerivation(XY, [x + y, MPoly(XY)]), 12).kind is LNDKind.NOT_NILPOTENT_WITHIN_BOUND


def test_lie_datum_two_variables():
    d = MultiDerivation(XY, [MPoly.var(XY, "y"), MPoly.constant(XY, 1)])
    ld = lie_datum(d, 16)
    x, y, one = MPoly.var(XY, 0), MPoly.var(XY, 1), MPoly.constant(XY, 1)
    assert set(ld.v_set) == {x, y, one}
    assert ld.dim_h == 3 and ld.dim_g == 4
    assert ld.nilpotency_class == 3
    sx, sy = sp.symbols("x y")
    dim_h, dims = lcs_dims_sympy([sy, sp.Integer(1)])
    assert (ld.dim_h, list(ld.lcs_dims)) == (dim_h, dims)
    assert ld.verify()


@pytest.mark.parametrize("lam", [Fraction(1), Fraction(-5, 2)])
def test_lie_datum_heisenberg(lam):
    ld = lie_datum(DerivationSpec.ordinary(lam), 8)
    assert ld.dim_h == 2 and ld.dim_g == 3
    assert ld.nilpotency_class == 2
    assert list(ld.lcs_dims) == lcs_dims_sympy([sp.Rational(lam.numerator, lam.denominator)], ("x",))[1]
    assert ld.verify()


def test_lie_datum_rejects_non_nilpotent():
    with pytest.raises(ValueError):
        lie_datum(DerivationSpec.ordinary(Poly.x()), 10)


@given(st.integers(0, 4), st.integers(1, 3))
def test_lie_datum_matches_sympy_on_triangular_family(a, c):
    # d(x) = c*y^a, d(y) = 1
    y = MPoly.var(XY, 1)
    d = MultiDerivation(XY, [y**a * c, MPoly.constant(XY, 1)])
    ld = lie_datum(d, 32)
    sx, sy = sp.symbols("x y")
    dim_h, dims = lcs_dims_sympy([c * sy**a, sp.Integer(1)])
    assert ld.dim_h == dim_h
    assert list(ld.lcs_dims) == dims
    assert ld.verify()


@pytest.mark.parametrize("g", [Poly.x(), Poly([1, 0, 1]), 1, Poly([-2, 0, 0, 1]), Poly([0, 0, 1])])
def test_lattice_iso(g):
    # Poly arguments are read as polynomials in y
    assert verify_lattice_iso_principal(g)


def test_lattice_iso_rejects_zero():
    with pytest.raises(ValueError):
        verify_lattice_iso_principal(0)
    with pytest.raises(ValueError):
        verify_lattice_iso_principal(MPoly.var(XY, "x"))
