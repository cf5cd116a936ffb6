"""Seeded random generators for polynomials and skew polynomials."""

from __future__ import annotations

import random
from fractions import Fraction

from .commalg import DerivationSpec
from .ore import SkewPoly
from .poly import Poly


def rand_scalar(rng: random.Random, lo: int = -5, hi: int = 5, nonzero: bool = False) -> Fraction:
    while True:
        c = Fraction(rng.randint(lo, hi), rng.randint(1, 3))
        if c or not nonzero:
            return c


def rand_poly(rng: random.Random, max_deg: int, nonzero: bool = False) -> Poly:
    while True:
        deg = rng.randint(0, max_deg)
        p = Poly([rand_scalar(rng) for _ in range(deg + 1)])
        if p or not nonzero:
            return p


def rand_nonconstant_poly(rng: random.Random, max_deg: int) -> Poly:
    while True:
        p = rand_poly(rng, max_deg)
        if not p.is_constant():
            return p


def rand_skew(rng: random.Random, spec: DerivationSpec, max_tdeg: int, max_xdeg: int) -> SkewPoly:
    n = rng.randint(0, max_tdeg)
    return SkewPoly([rand_poly(rng, max_xdeg) for _ in range(n + 1)], spec)


def rand_theta_monic(rng: random.Random, spec: DerivationSpec, max_tdeg: int, max_xdeg: int) -> SkewPoly:
    """A skew polynomial whose leading theta-coefficient is a nonzero constant."""
    n = rng.randint(0, max_tdeg)
    coeffs = [rand_poly(rng, max_xdeg) for _ in range(n)]
    coeffs.append(Poly.constant(rand_scalar(rng, nonzero=True)))
    return SkewPoly(coeffs, spec)


def rand_spec(rng: random.Random, max_deg: int = 3, identity: bool = False) -> DerivationSpec:
    if identity:
        return DerivationSpec.ordinary(rand_poly(rng, max_deg))
    q = rand_scalar(rng, nonzero=True)
    return DerivationSpec(q, rand_scalar(rng), rand_poly(rng, max_deg))
