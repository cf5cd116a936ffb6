"""Seeded invariant suite run by ``orext verify``.

Each check draws its own samples from a shared :class:`random.Random` and
returns ``(passed, samples)``. Sizes are kept small so the whole suite runs
in a few seconds.
"""

from __future__ import annotations

import random
from math import comb
from typing import Callable

from .classify import decide_diamond, normalize
from .commalg import (
    DerivationSpec,
    MultiDerivation,
    d_apply,
    d_ideal_closure,
    d_primitive_witness,
    is_locally_nilpotent_uni,
    lie_datum,
    sigma_apply,
    verify_lattice_iso_principal,
)
from .ore import (
    SkewPoly,
    chain_certificate,
    essentialize,
    from_right_form,
    membership_I,
    module_action,
    right_divide,
    right_normal_form,
)
from .poly import MPoly, Poly
from .sampling import (
    rand_nonconstant_poly,
    rand_poly,
    rand_scalar,
    rand_skew,
    rand_spec,
    rand_theta_monic,
)
from .scalar import scalar_inverse, zeta

Check = Callable[[random.Random], tuple[bool, int]]


def check_field_axioms(rng):
    n = 0
    for cond in (1, 3, 4, 5, 7):
        for _ in range(4):
            a, b, c = (
                sum((rand_scalar(rng) * zeta(cond, k) for k in range(3)), rand_scalar(rng))
                for _ in range(3)
            )
            if (a + b) + c != a + (b + c) or a * (b + c) != a * b + a * c:
                return False, n
            if a and a * scalar_inverse(a) != 1:
                return False, n
            n += 1
    return True, n


def check_sigma_leibniz(rng):
    for i in range(20):
        spec = rand_spec(rng)
        p, r = rand_poly(rng, 5), rand_poly(rng, 5)
        if d_apply(spec, p * r) != sigma_apply(spec, p) * d_apply(spec, r) + d_apply(spec, p) * r:
            return False, i
    return True, 20


def check_ring_axioms(rng):
    for i in range(15):
        spec = rand_spec(rng, 2, identity=i % 2 == 0)
        f, g, h = (rand_skew(rng, spec, 2, 2) for _ in range(3))
        if (f * g) * h != f * (g * h) or f * (g + h) != f * g + f * h:
            return False, i
        if from_right_form(right_normal_form(f), spec) != f:
            return False, i
    return True, 15


def check_commutation_identities(rng):
    for i in range(20):
        spec = DerivationSpec.ordinary(rand_poly(rng, 2))
        a = rand_poly(rng, 4)
        n = rng.randint(0, 5)
        A = SkewPoly([a], spec)
        ders = [a]
        for _ in range(n):
            ders.append(d_apply(spec, ders[-1]))
        expect_left = SkewPoly([ders[n - k] * comb(n, k) for k in range(n + 1)], spec)
        if SkewPoly.theta(spec, n) * A != expect_left:
            return False, i
        expect_right = SkewPoly([], spec)
        for k in range(n + 1):
            expect_right = expect_right + SkewPoly.theta(spec, n - k) * SkewPoly(
                [ders[k] * (comb(n, k) * (-1) ** k)], spec
            )
        if A * SkewPoly.theta(spec, n) != expect_right:
            return False, i
    return True, 20


def check_division(rng):
    for i in range(20):
        spec = rand_spec(rng, 2, identity=i % 2 == 0)
        f = rand_skew(rng, spec, 4, 3)
        g = rand_theta_monic(rng, spec, 3, 2)
        q, r = right_divide(f, g)
        if q * g + r != f or (r and r.degree >= g.degree):
            return False, i
    return True, 20


def check_torsionfree_identity(rng):
    for i in range(15):
        spec = DerivationSpec.ordinary(1)
        g0, g1, a = rand_poly(rng, 4), rand_poly(rng, 4), rand_poly(rng, 3)
        theta = SkewPoly.theta(spec)
        gamma = SkewPoly([g0, g1], spec)
        _, r = right_divide(theta * gamma, (theta + SkewPoly([a], spec)) * theta)
        want = SkewPoly([d_apply(spec, g0), g0 + d_apply(spec, g1) - g1 * a], spec)
        if r != want:
            return False, i
    return True, 15


def check_module_action(rng):
    for i in range(15):
        spec = DerivationSpec.ordinary(rand_poly(rng, 2))
        f, g = rand_skew(rng, spec, 2, 2), rand_skew(rng, spec, 2, 2)
        p = rand_poly(rng, 4)
        if module_action(f * g, p) != module_action(f, module_action(g, p)):
            return False, i
        if module_action(f, 1) != f.constant_coefficient:
            return False, i
    return True, 15


def check_normalization(rng):
    for i in range(20):
        spec = rand_spec(rng, 3)
        nf = normalize(spec)
        if not nf.replay():
            return False, i
    return True, 20


def check_diamond_consistency(rng):
    for i in range(20):
        spec = DerivationSpec.ordinary(rand_poly(rng, 4))
        v = decide_diamond(spec)
        if v.satisfied != is_locally_nilpotent_uni(spec):
            return False, i
        if not v.satisfied:
            alpha = d_primitive_witness(spec)
            if not chain_certificate(spec.dx, alpha, 3).verify():
                return False, i
    return True, 20


def check_d_simple_closure(rng):
    spec = DerivationSpec.ordinary(rand_scalar(rng, nonzero=True))
    for i in range(20):
        if d_ideal_closure(rand_nonconstant_poly(rng, 5), spec) != Poly.constant(1):
            return False, i
    return True, 20


def check_essentializer(rng):
    spec = DerivationSpec.ordinary(Poly({2: 1}))
    n = 0
    while n < 20:
        u = rand_skew(rng, spec, 3, 3)
        if not u or membership_I(u, 1):
            continue
        w = essentialize(u, 1)
        if not w.verify():
            return False, n
        n += 1
    return True, n


def check_lattice(rng):
    for i in range(5):
        g = rand_poly(rng, 3, nonzero=True)
        if not verify_lattice_iso_principal(g, seed=rng.randint(0, 10**6)):
            return False, i
    return True, 5


def check_lie_datum(rng):
    names = ("x", "y")
    d = MultiDerivation(names, [MPoly.var(names, "y"), MPoly.constant(names, 1)])
    ld = lie_datum(d, 16)
    ok = ld.dim_h == 3 and ld.nilpotency_class == 3 and ld.verify()
    lam = rand_scalar(rng, nonzero=True)
    ld1 = lie_datum(DerivationSpec.ordinary(lam), 16)
    ok = ok and ld1.dim_g == 3 and ld1.nilpotency_class == 2 and ld1.verify()
    return ok, 2


CHECKS: dict[str, Check] = {
    "field_axioms": check_field_axioms,
    "sigma_leibniz": check_sigma_leibniz,
    "ring_axioms_and_normal_forms": check_ring_axioms,
    "commutation_identities": check_commutation_identities,
    "division": check_division,
    "torsionfree_identity": check_torsionfree_identity,
    "module_action": check_module_action,
    "normalization_replay": check_normalization,
    "diamond_consistency": check_diamond_consistency,
    "d_simple_closure": check_d_simple_closure,
    "essentializer": check_essentializer,
    "lattice_iso_principal": check_lattice,
    "lie_datum": check_lie_datum,
}


def run_checks(seed: int = 0) -> list[dict]:
    rng = random.Random(seed)
    out = []
    for name, fn in CHECKS.items():
        passed, samples = fn(rng)
        out.append({"name": name, "passed": bool(passed), "samples": samples})
    return out
