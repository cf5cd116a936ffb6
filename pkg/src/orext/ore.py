"""Skew polynomials in the Ore extension S = K[x][theta; sigma, d].

Elements are stored in left normal form ``sum a_i(x) theta^i`` and multiplied
with the single-step rule ``theta*a = sigma(a)*theta + d(a)``. The second half
of the module builds checkable witnesses in the differential case
(sigma = id) around a maximal ideal m = <x - alpha> of K[x]:

* :func:`essentialize` - a left multiplier pushing an element of S/I, with
  ``I = S*m*theta``, into the submodule S*theta/I;
* :func:`chain_certificate` - a strictly descending chain of left ideals of S
  containing I, showing that S/I is not Artinian;
* :func:`maximality_certificate` - a cofactor u with ``u*g = 1`` modulo S*m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import _linalg
from .commalg import (
    DerivationSpec,
    d_apply,
    d_ideal_closure,
    sigma_apply,
    sigma_inverse_apply,
)
from .poly import Poly, _coef_str, _is_scalar, _join_terms
from .scalar import Scalar, as_scalar, scalar_inverse, scalar_str

__all__ = [
    "ChainCertificate",
    "EssentialWitness",
    "MaximalityCertificate",
    "SkewPoly",
    "chain_certificate",
    "essentialize",
    "maximality_certificate",
    "membership_I",
    "module_action",
    "reduce_mod_Sm",
    "right_divide",
    "right_normal_form",
    "skew_mul",
]


class SkewPoly:
    """An element ``sum coeffs[i] * theta^i`` of K[x][theta; sigma, d]."""

    __slots__ = ("coeffs", "spec", "_hash")

    def __init__(self, coeffs: Iterable = (), spec: DerivationSpec | None = None):
        if spec is None:
            spec = DerivationSpec()
        cs = [Poly.coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs: tuple[Poly, ...] = tuple(cs)
        self.spec = spec
        self._hash = None

    @classmethod
    def theta(cls, spec: DerivationSpec, n: int = 1) -> "SkewPoly":
        return cls([Poly()] * n + [Poly.constant(1)], spec)

    @classmethod
    def from_poly(cls, p, spec: DerivationSpec) -> "SkewPoly":
        return cls([Poly.coerce(p)], spec)

    @classmethod
    def monomial(cls, a, n: int, spec: DerivationSpec) -> "SkewPoly":
        """``a * theta^n``."""
        return cls([Poly()] * n + [Poly.coerce(a)], spec)

    @property
    def degree(self):
        """theta-degree; ``-math.inf`` for zero."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    def coeff(self, i: int) -> Poly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Poly()

    @property
    def constant_coefficient(self) -> Poly:
        return self.coeff(0)

    @property
    def leading_coefficient(self) -> Poly:
        return self.coeffs[-1] if self.coeffs else Poly()

    def __bool__(self):
        return bool(self.coeffs)

    def _lift(self, other) -> "SkewPoly | None":
        if isinstance(other, SkewPoly):
            if other.spec != self.spec:
                raise ValueError("skew polynomials belong to different Ore extensions")
            return other
        if isinstance(other, Poly) or _is_scalar(other):
            return SkewPoly([other], self.spec)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return SkewPoly([self.coeff(i) + o.coeff(i) for i in range(n)], self.spec)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return SkewPoly([-c for c in self.coeffs], self.spec)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return skew_mul(self, o)

    def __rmul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return skew_mul(o, self)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = SkewPoly([1], self.spec), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self.spec == other.spec and self.coeffs == other.coeffs
        if isinstance(other, Poly) or _is_scalar(other):
            return self.coeffs == SkewPoly([other], self.spec).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"SkewPoly({self})"

    def __str__(self):
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if not a:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.extend(_poly_terms(a))
            elif a.is_constant():
                terms.append(_coef_str(a.coeff(0), mono))
            elif len(a.terms) == 1:
                (e, c), = a.terms.items()
                xm = "x" if e == 1 else f"x^{e}"
                terms.append(_coef_str(c, f"{xm}*{mono}"))
            else:
                terms.append((False, f"({a})*{mono}"))
        return _join_terms(terms)


def _poly_terms(a: Poly) -> list[tuple[bool, str]]:
    out = []
    for e in sorted(a.terms, reverse=True):
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        out.append(_coef_str(a.terms[e], mono))
    return out


def _theta_times(spec: DerivationSpec, coeffs: Sequence[Poly]) -> list[Poly]:
    """Left form of ``theta * sum c_k theta^k``."""
    out = [Poly()] * (len(coeffs) + 1)
    for k, c in enumerate(coeffs):
        if not c:
            continue
        out[k + 1] = out[k + 1] + sigma_apply(spec, c)
        dc = d_apply(spec, c)
        if dc:
            out[k] = out[k] + dc
    return out


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product in S, commuting theta past coefficients one step at a time."""
    if f.spec != g.spec:
        raise ValueError("skew polynomials belong to different Ore extensions")
    spec = f.spec
    if not f or not g:
        return SkewPoly([], spec)
    acc = [Poly()] * (len(f.coeffs) + len(g.coeffs) - 1)
    cur = list(g.coeffs)  # theta^i * g, starting at i = 0
    for i, a in enumerate(f.coeffs):
        if i:
            cur = _theta_times(spec, cur)
        if a:
            for k, c in enumerate(cur):
                if c:
                    acc[k] = acc[k] + a * c
    return SkewPoly(acc, spec)


def right_normal_form(f: SkewPoly) -> list[Poly]:
    """Coordinates ``c_i`` with ``f = sum theta^i * c_i``.

    Peels off the top term: ``theta^n * c`` has leading coefficient
    ``sigma^n(c)``, so ``c = sigma^{-n}(a_n)``.
    """
    spec = f.spec
    out: list[Poly] = [Poly()] * len(f.coeffs)
    rest = f
    while rest:
        n = len(rest.coeffs) - 1
        c = rest.leading_coefficient
        for _ in range(n):
            c = sigma_inverse_apply(spec, c)
        out[n] = c
        rest = rest - SkewPoly.theta(spec, n) * SkewPoly([c], spec)
    return out


def from_right_form(cs: Sequence, spec: DerivationSpec) -> SkewPoly:
    """Left normal form of ``sum theta^i * cs[i]``."""
    out = SkewPoly([], spec)
    for i, c in enumerate(cs):
        if c:
            out = out + SkewPoly.theta(spec, i) * SkewPoly([c], spec)
    return out


def right_divide(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """Return ``(q, r)`` with ``f = q*g + r`` and ``deg r < deg g``.

    The leading theta-coefficient of ``g`` must be a nonzero constant.
    """
    if f.spec != g.spec:
        raise ValueError("skew polynomials belong to different Ore extensions")
    if not g:
        raise ZeroDivisionError("division by zero skew polynomial")
    lc = g.leading_coefficient
    if not lc.is_constant():
        raise ValueError(f"leading coefficient {lc} of the divisor is not a unit of K[x]")
    inv = scalar_inverse(lc.coeff(0))
    m = len(g.coeffs) - 1
    spec = f.spec
    quo = SkewPoly([], spec)
    rem = f
    while rem and len(rem.coeffs) - 1 >= m:
        k = len(rem.coeffs) - 1 - m
        # theta^k * c = c * theta^k + ..., and sigma^k fixes constants
        t = SkewPoly.monomial(rem.leading_coefficient * inv, k, spec)
        quo = quo + t
        rem = rem - t * g
    return quo, rem


def module_action(f: SkewPoly, p) -> Poly:
    """Action of S on R = K[x] with theta acting as d: ``a*theta^n . p = a*d^n(p)``."""
    spec = f.spec
    spec.require_identity_sigma("the module action on K[x]")
    p = Poly.coerce(p)
    out = Poly()
    cur = p
    for i, a in enumerate(f.coeffs):
        if i:
            cur = d_apply(spec, cur)
        if a:
            out = out + a * cur
    return out


def reduce_mod_Sm(f: SkewPoly, alpha) -> tuple[Scalar, ...]:
    """Coordinates of ``f + S*m`` in ``S/S*m = sum theta^i K`` for m = <x - alpha>.

    S is free as a right K[x]-module on the powers of theta, so S*m is the set
    of ``sum theta^i c_i`` with every ``c_i`` in m. The coordinates are the
    values ``c_i(alpha)``; ``f`` lies in S*m iff they all vanish.
    """
    f.spec.require_identity_sigma("reduction modulo S*m")
    alpha = as_scalar(alpha)
    return tuple(c(alpha) for c in right_normal_form(f))


def _is_zero_vector(v: Iterable[Scalar]) -> bool:
    return not any(v)


def membership_I(f: SkewPoly, alpha) -> bool:
    """Is ``f`` in ``I = S*(x - alpha)*theta``?

    Sθ consists of the left forms with zero constant coefficient; writing
    ``f = q*theta`` then ``f`` is in I iff ``q`` is in S*m.
    """
    f.spec.require_identity_sigma("membership in S*m*theta")
    if f.constant_coefficient:
        return False
    q = SkewPoly(f.coeffs[1:], f.spec)
    return _is_zero_vector(reduce_mod_Sm(q, alpha))


def _canonical_mod_I(f: SkewPoly, alpha: Scalar) -> SkewPoly:
    # S = R + S*theta and S*theta/I = S/S*m, so f = a0 + q*theta is congruent to
    # a0 + sum kappa_i theta^(i+1) with kappa = reduce_mod_Sm(q)
    q = SkewPoly(f.coeffs[1:], f.spec)
    kappa = reduce_mod_Sm(q, alpha)
    return SkewPoly([f.constant_coefficient] + [Poly.constant(k) for k in kappa], f.spec)


@dataclass(frozen=True)
class EssentialWitness:
    """A left multiplier ``s`` with ``s*u`` in ``S*theta`` but not in ``I``."""

    alpha: Scalar
    multiplier: SkewPoly
    input: SkewPoly
    product: SkewPoly
    shift_steps: int

    def verify(self) -> bool:
        return (
            self.multiplier * self.input == self.product
            and not self.product.constant_coefficient
            and not membership_I(self.product, self.alpha)
        )

    def to_dict(self) -> dict:
        return {
            "alpha": scalar_str(self.alpha),
            "input": str(self.input),
            "multiplier": str(self.multiplier),
            "product": str(self.product),
            "shift_steps": self.shift_steps,
        }


def essentialize(u: SkewPoly, alpha) -> EssentialWitness:
    """Find ``s`` with ``s*u`` in ``S*theta`` minus ``I = S*(x - alpha)*theta``.

    If ``u`` already has zero constant coefficient, ``s = 1``. Otherwise
    ``u`` is first replaced by its canonical representative modulo I (whose
    theta-part has constant coefficients), ``theta^m`` is applied for the least
    m with ``d^m(a_0)(alpha) != 0``, and finally ``b*theta - d(b)`` with ``b``
    the resulting constant coefficient, using ``(b*theta - d(b))*b = b^2*theta``.
    """
    spec = u.spec
    spec.require_identity_sigma("essentialize")
    alpha = as_scalar(alpha)
    if not spec.dx(alpha):
        raise ValueError(
            f"d(x) vanishes at alpha = {scalar_str(alpha)}: <x - alpha> contains a nonzero d-ideal"
        )
    if not u or membership_I(u, alpha):
        raise ValueError("input lies in I = S*(x - alpha)*theta")
    one = SkewPoly([1], spec)
    a0 = u.constant_coefficient
    if not a0:
        return EssentialWitness(alpha, one, u, u, 0)

    m, cur = 0, a0
    # d lowers the multiplicity of alpha as a root by exactly one, so this stops
    while not cur(alpha):
        cur = d_apply(spec, cur)
        m += 1
        if m > a0.degree + 1:
            raise AssertionError("no derivative of a0 survives at alpha")
    shift = SkewPoly.theta(spec, m)
    v = _canonical_mod_I(shift * _canonical_mod_I(u, alpha), alpha)
    b = v.constant_coefficient
    assert b == cur
    s = SkewPoly([-d_apply(spec, b), b], spec) * shift
    return EssentialWitness(alpha, s, u, s * u, m)


# ---------------------------------------------------------------------------
# chain certificates


@dataclass(frozen=True)
class ChainLink:
    """Evidence for ``L_j = S*<f^j> + S*theta``.

    ``facts`` maps a fact name to whether it was found to hold.
    """

    j: int
    element: Poly
    facts: dict = field(default_factory=dict)


def _chain_facts(spec: DerivationSpec, f: Poly, j: int, k: int) -> dict:
    fj = f ** j
    facts = {
        # <f^j> is d-stable, so L_j ∩ R = <f^j>
        "d_stable": d_ideal_closure(fj, spec) == fj.monic(),
        # f^j lies in L_j
        "member": fj.divides(fj),
        # L_{j+1} is contained in L_j
        "next_contained": fj.divides(f ** (j + 1)),
    }
    if j < k:
        # f^j is not in L_{j+1}
        facts["strict"] = not (f ** (j + 1)).divides(fj)
    return facts


@dataclass(frozen=True)
class ChainCertificate:
    """A strictly descending chain ``L_1 > L_2 > ... > L_k`` of left ideals of S.

    Each ``L_j = S*<f^j> + S*theta`` contains ``I = S*(x - alpha)*theta``, so
    the chain lives in the lattice of S/I. All evidence reduces to
    divisibility facts in K[x] and is rechecked by :meth:`verify`.
    """

    spec: DerivationSpec
    f: Poly
    alpha: Scalar
    k: int
    links: tuple[ChainLink, ...]
    contains_I: bool

    def verify(self) -> bool:
        if self.f.is_constant() or not self.f(self.alpha):
            return False
        gen = SkewPoly([Poly(), Poly({0: -self.alpha, 1: 1})], self.spec)
        if gen.constant_coefficient:
            return False
        for link in self.links:
            if link.element != self.f ** link.j:
                return False
            if not all(_chain_facts(self.spec, self.f, link.j, self.k).values()):
                return False
        return len(self.links) == self.k

    def to_dict(self) -> dict:
        return {
            "f": str(self.f),
            "alpha": scalar_str(self.alpha),
            "k": self.k,
            "contains_I": self.contains_I,
            "links": [
                {"j": l.j, "element": str(l.element), "facts": dict(l.facts)} for l in self.links
            ],
        }


def chain_certificate(dx, alpha, k: int, spec: DerivationSpec | None = None) -> ChainCertificate:
    """Non-Artinian witness for S/S*m*theta when ``d = dx * d/dx`` is not d-simple.

    ``dx`` must be nonconstant and nonzero at ``alpha``.
    """
    f = Poly.coerce(dx)
    if spec is None:
        spec = DerivationSpec.ordinary(f)
    elif spec.dx != f:
        raise ValueError("dx does not match the derivation")
    spec.require_identity_sigma("chain certificates")
    alpha = as_scalar(alpha)
    if k < 1:
        raise ValueError("chain length must be positive")
    if f.is_constant():
        raise ValueError("R is d-simple: no proper chain exists")
    if not f(alpha):
        raise ValueError(f"d(x) vanishes at alpha = {scalar_str(alpha)}")
    # (x - alpha)*theta has zero constant coefficient, so I is inside S*theta
    gen = SkewPoly([Poly(), Poly({0: -alpha, 1: 1})], spec)
    contains = not gen.constant_coefficient
    links = tuple(ChainLink(j, f ** j, _chain_facts(spec, f, j, k)) for j in range(1, k + 1))
    return ChainCertificate(spec, f, alpha, k, links, contains)


# ---------------------------------------------------------------------------
# maximality


@dataclass(frozen=True)
class MaximalityCertificate:
    """A cofactor ``u`` with ``u*g = 1`` modulo S*<x - alpha>."""

    alpha: Scalar
    g: SkewPoly
    cofactor: SkewPoly
    search_degree: int

    def verify(self) -> bool:
        if _is_zero_vector(reduce_mod_Sm(self.g, self.alpha)):
            return False
        return _is_zero_vector(reduce_mod_Sm(self.cofactor * self.g - 1, self.alpha))

    def to_dict(self) -> dict:
        return {
            "alpha": scalar_str(self.alpha),
            "g": str(self.g),
            "cofactor": str(self.cofactor),
            "search_degree": self.search_degree,
        }


def maximality_certificate(alpha, g: SkewPoly, D: int = 8) -> Optional[MaximalityCertificate]:
    """Search ``u = sum_{i+j<=D} lam_ij x^i theta^j`` with ``u*g = 1`` mod S*m.

    Tries total degrees 0..D in turn and returns the first certificate, or
    ``None`` if none exists at degree D. Solving is exact with a fixed pivot
    order, so results are reproducible.
    """
    spec = g.spec
    spec.require_identity_sigma("maximality certificates")
    alpha = as_scalar(alpha)
    if _is_zero_vector(reduce_mod_Sm(g, alpha)):
        raise ValueError("g lies in S*m")
    monos: list[SkewPoly] = []
    cols: list[tuple[Scalar, ...]] = []
    for deg in range(D + 1):
        for i in range(deg, -1, -1):
            mono = SkewPoly.monomial(Poly.monomial(i), deg - i, spec)
            monos.append(mono)
            cols.append(reduce_mod_Sm(mono * g, alpha))
        size = max(1, max(len(c) for c in cols))
        padded = [list(c) + [Fraction(0)] * (size - len(c)) for c in cols]
        target = [Fraction(1)] + [Fraction(0)] * (size - 1)
        sol = _linalg.solve(padded, target)
        if sol is not None:
            u = SkewPoly([], spec)
            for lam, mono in zip(sol, monos):
                if lam:
                    u = u + mono * lam
            cert = MaximalityCertificate(alpha, g, u, deg)
            if not cert.verify():
                raise AssertionError("linear solve produced a cofactor that fails re-verification")
            return cert
    return None
