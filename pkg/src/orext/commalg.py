"""Derivations and sigma-derivations of polynomial rings, and d-ideal tools.

The univariate setting is K[x] with an automorphism ``sigma(x) = q*x + b``
and a sigma-derivation determined by its value ``dx = d(x)``. The
multivariate setting (:class:`MultiDerivation`) is restricted to ordinary
derivations (sigma = identity) and is used for local-nilpotency checks and
the nilpotent Lie algebra spanned by iterated derivatives of the generators.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import _linalg
from .poly import MPoly, Poly, poly_gcd
from .scalar import Scalar, as_scalar, scalar_inverse, scalar_str

__all__ = [
    "DerivationSpec",
    "LieDatum",
    "LNDKind",
    "LNDResult",
    "MultiDerivation",
    "d_apply",
    "d_ideal_closure",
    "d_primitive_witness",
    "is_d_simple",
    "is_locally_nilpotent_uni",
    "lie_datum",
    "lnd_check_multi",
    "sigma_apply",
    "sigma_inverse_apply",
    "verify_lattice_iso_principal",
]


@dataclass(frozen=True)
class DerivationSpec:
    """A sigma-derivation of K[x] with ``sigma(x) = q*x + b`` and ``d(x) = dx``.

    ``d`` extends to all of K[x] by the rule ``d(uv) = sigma(u) d(v) + d(u) v``.
    """

    q: Scalar = Fraction(1)
    b: Scalar = Fraction(0)
    dx: Poly = field(default_factory=Poly)

    def __post_init__(self):
        object.__setattr__(self, "q", as_scalar(self.q))
        object.__setattr__(self, "b", as_scalar(self.b))
        object.__setattr__(self, "dx", Poly.coerce(self.dx))
        if not self.q:
            raise ValueError("sigma(x) = q*x + b is not an automorphism when q = 0")

    @classmethod
    def ordinary(cls, dx) -> "DerivationSpec":
        """The derivation ``dx * d/dx`` (sigma = identity)."""
        return cls(Fraction(1), Fraction(0), Poly.coerce(dx))

    @property
    def sigma_is_identity(self) -> bool:
        return self.q == 1 and self.b == 0

    def require_identity_sigma(self, what: str = "this operation") -> None:
        if not self.sigma_is_identity:
            raise ValueError(f"{what} requires sigma = id (got q={self.q}, b={self.b})")

    def __call__(self, p) -> Poly:
        return d_apply(self, p)

    def __str__(self):
        return f"sigma: q={scalar_str(self.q)}, b={scalar_str(self.b)}; d(x)={self.dx}"


def sigma_apply(spec: DerivationSpec, p) -> Poly:
    """``sigma(p) = p(q*x + b)``."""
    p = Poly.coerce(p)
    if spec.sigma_is_identity:
        return p
    return p(Poly({0: spec.b, 1: spec.q}))


def sigma_inverse_apply(spec: DerivationSpec, p) -> Poly:
    """``sigma^{-1}(p) = p((x - b)/q)``."""
    p = Poly.coerce(p)
    if spec.sigma_is_identity:
        return p
    qinv = scalar_inverse(spec.q)
    return p(Poly({0: as_scalar(-spec.b * qinv), 1: qinv}))


def d_apply(spec: DerivationSpec, p) -> Poly:
    """Apply the sigma-derivation to a polynomial.

    Uses ``d(x^n) = sum_{i<n} sigma(x)^i * dx * x^(n-1-i)`` extended K-linearly.
    """
    p = Poly.coerce(p)
    if not p or not spec.dx:
        return Poly()
    if spec.sigma_is_identity:
        return p.derivative() * spec.dx
    sx = Poly({0: spec.b, 1: spec.q})
    n = p.degree
    sx_pows = [Poly.constant(1)]
    for _ in range(n):
        sx_pows.append(sx_pows[-1] * sx)
    out = Poly()
    for e, c in p.terms.items():
        if e == 0:
            continue
        acc = Poly()
        for i in range(e):
            acc = acc + sx_pows[i] * Poly.monomial(e - 1 - i)
        out = out + acc * c
    return out * spec.dx


def is_locally_nilpotent_uni(spec: DerivationSpec) -> bool:
    """Local nilpotency of ``dx * d/dx`` on K[x]: holds iff dx is a constant."""
    spec.require_identity_sigma("local nilpotency test")
    return spec.dx.is_constant()


def d_ideal_closure(g, spec: DerivationSpec) -> Poly:
    """Monic generator of the smallest d-stable ideal of K[x] containing ``g``.

    Iterates ``h <- gcd(h, d(h))`` until stable; the degree drops at every
    non-final step so the loop terminates.
    """
    spec.require_identity_sigma("d-ideal closure")
    h = Poly.coerce(g)
    if not h:
        return Poly()
    h = h.monic()
    while True:
        h2 = poly_gcd(h, d_apply(spec, h))
        if h2 == h:
            return h
        h = h2


def is_d_simple(spec: DerivationSpec) -> bool:
    """K[x] has no d-ideals besides 0 and K[x] iff dx is a nonzero constant."""
    spec.require_identity_sigma("d-simplicity test")
    return bool(spec.dx) and spec.dx.is_constant()


def d_primitive_witness(spec: DerivationSpec) -> Optional[Fraction]:
    """Least alpha in 0, 1, 2, ... with ``dx(alpha) != 0``.

    The maximal ideal <x - alpha> then contains no nonzero d-ideal. Returns
    ``None`` for the zero derivation, for which every ideal is d-stable.
    """
    spec.require_identity_sigma("d-primitivity witness")
    f = spec.dx
    if not f:
        return None
    a = 0
    while not f(a):
        a += 1
    return Fraction(a)


# ---------------------------------------------------------------------------
# multivariate derivations


class MultiDerivation:
    """An ordinary derivation of K[x_1..x_n] given by the images of the generators."""

    __slots__ = ("names", "images")

    def __init__(self, names: Sequence[str], images: Sequence):
        self.names = tuple(names)
        if len(images) != len(self.names):
            raise ValueError("need one image per variable")
        imgs = []
        for im in images:
            if isinstance(im, MPoly):
                if im.names != self.names:
                    raise ValueError("image lives in a different ring")
            else:
                im = MPoly.constant(self.names, im)
            imgs.append(im)
        self.images = tuple(imgs)

    @classmethod
    def from_spec(cls, spec: DerivationSpec, name: str = "x") -> "MultiDerivation":
        spec.require_identity_sigma("multivariate derivation")
        return cls((name,), [MPoly.from_poly((name,), spec.dx)])

    def var(self, i) -> MPoly:
        return MPoly.var(self.names, i)

    def __call__(self, p: MPoly) -> MPoly:
        out = MPoly(self.names)
        for j, im in enumerate(self.images):
            if im:
                dp = p.diff(j)
                if dp:
                    out = out + im * dp
        return out

    def __repr__(self):
        body = "; ".join(f"d({n})={im}" for n, im in zip(self.names, self.images))
        return f"MultiDerivation({body})"


class LNDKind(enum.Enum):
    TRIANGULAR = "triangular"
    NILPOTENT = "nilpotent"
    NOT_NILPOTENT_WITHIN_BOUND = "not_nilpotent_within_bound"


@dataclass(frozen=True)
class LNDResult:
    """Outcome of :func:`lnd_check_multi`.

    ``order`` is set for a triangular certificate, listing variables so that
    each one's image lies in K[earlier variables]. ``max_iterations`` is set
    for the iteration route. A NOT_NILPOTENT_WITHIN_BOUND result is only the
    absence of a proof.
    """

    kind: LNDKind
    bound: int
    order: Optional[tuple[str, ...]] = None
    max_iterations: Optional[int] = None

    @property
    def certified(self) -> bool:
        return self.kind is not LNDKind.NOT_NILPOTENT_WITHIN_BOUND


def _triangular_order(d: MultiDerivation) -> Optional[list[int]]:
    # greedy is complete: the set of placeable variables only grows
    placed: list[int] = []
    remaining = set(range(len(d.names)))
    while remaining:
        ok = [i for i in sorted(remaining) if d.images[i].variables() <= set(placed)]
        if not ok:
            return None
        placed.append(ok[0])
        remaining.discard(ok[0])
    return placed


def lnd_check_multi(d: MultiDerivation, bound: int) -> LNDResult:
    """Semidecision for local nilpotency of a derivation of K[x_1..x_n].

    First looks for a triangular variable ordering, then falls back to
    iterating d on each generator for at most ``bound`` steps.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    order = _triangular_order(d)
    if order is not None:
        return LNDResult(LNDKind.TRIANGULAR, bound, order=tuple(d.names[i] for i in order))
    worst = 0
    for j in range(len(d.names)):
        v = d.var(j)
        k = 0
        while v and k < bound:
            v = d(v)
            k += 1
        if v:
            return LNDResult(LNDKind.NOT_NILPOTENT_WITHIN_BOUND, bound)
        worst = max(worst, k)
    return LNDResult(LNDKind.NILPOTENT, bound, max_iterations=worst)


# ---------------------------------------------------------------------------
# Lie datum


def _monomial_vectors(polys: Sequence[MPoly]) -> list[list[Scalar]]:
    monos = sorted({e for p in polys for e in p.terms})
    return [[p.terms.get(m, Fraction(0)) for m in monos] for p in polys]


def _span_basis(polys: Sequence[MPoly]) -> list[MPoly]:
    """Greedy linearly independent subset, in input order."""
    basis: list[MPoly] = []
    for p in polys:
        if p and _linalg.rank(_monomial_vectors(basis + [p])) > len(basis):
            basis.append(p)
    return basis


def _in_span(p: MPoly, basis: Sequence[MPoly]) -> bool:
    if not p:
        return True
    return _linalg.rank(_monomial_vectors(list(basis) + [p])) == len(_span_basis(basis))


@dataclass(frozen=True)
class LieDatum:
    """The abelian subspace h = span{d^i(x_j)} and the Lie algebra g = h + K*theta.

    The bracket on g is ``[theta, v] = d(v)`` with h abelian. ``lcs_dims``
    lists the dimensions of the lower central series g = g_1, g_2, ... down
    to the first zero term.
    """

    derivation: MultiDerivation
    v_set: tuple[MPoly, ...]
    basis_h: tuple[MPoly, ...]
    nilpotency_class: int
    lcs_dims: tuple[int, ...]
    note: str = (
        "Lie datum computed over the rationals; the positive result for this "
        "datum assumes an algebraically closed base field, which is not asserted here."
    )

    @property
    def dim_h(self) -> int:
        return len(self.basis_h)

    @property
    def dim_g(self) -> int:
        return len(self.basis_h) + 1

    def verify(self) -> bool:
        """Re-check span and bracket closure from scratch."""
        d = self.derivation
        if not all(_in_span(v, self.basis_h) for v in self.v_set):
            return False
        if _linalg.rank(_monomial_vectors(list(self.basis_h))) != len(self.basis_h):
            return False
        return all(_in_span(d(v), self.basis_h) for v in self.basis_h)


def lie_datum(d, bound: int = 32) -> LieDatum:
    """Build the finite-dimensional nilpotent Lie algebra attached to a locally nilpotent d.

    Raises :class:`ValueError` when d is not certified locally nilpotent
    within ``bound``.
    """
    if isinstance(d, DerivationSpec):
        d = MultiDerivation.from_spec(d)
    check = lnd_check_multi(d, bound)
    if not check.certified:
        raise ValueError(f"derivation not certified locally nilpotent within {bound} steps")

    v_set: list[MPoly] = []
    seen: set[MPoly] = set()
    for j in range(len(d.names)):
        v = d.var(j)
        while v:
            if v not in seen:
                seen.add(v)
                v_set.append(v)
            v = d(v)
    basis_h = _span_basis(v_set)

    # elements of g as (h-part, theta coefficient); bracket [(u,s),(w,t)] = s d(w) - t d(u)
    g_basis: list[tuple[MPoly, Scalar]] = [(h, Fraction(0)) for h in basis_h]
    g_basis.append((MPoly(d.names), Fraction(1)))
    dims = [len(g_basis)]
    term = g_basis
    while True:
        brackets = []
        for u, s in g_basis:
            for w, t in term:
                br = d(w) * s - d(u) * t
                if br:
                    brackets.append(br)
        new_basis = _span_basis(brackets)
        if not new_basis:
            break
        dims.append(len(new_basis))
        term = [(h, Fraction(0)) for h in new_basis]
    return LieDatum(d, tuple(v_set), tuple(basis_h), len(dims), tuple(dims))


# ---------------------------------------------------------------------------
# principal ideals in K[y][x] under d = d/dx


_XY = ("x", "y")


def _divmod_by_y_poly(h: MPoly, g: MPoly) -> tuple[MPoly, MPoly]:
    """Division in K[x, y] by ``g`` in K[y]; the remainder has y-degree < deg_y g."""
    m = g.degree_in(1)
    lead = g.coefficient_in(1, m).terms[(0, 0)]
    inv = scalar_inverse(lead)
    quo = MPoly(_XY)
    rem = h
    while True:
        tops = [e for e in rem.terms if e[1] >= m]
        if not tops:
            return quo, rem
        e = max(tops, key=lambda e: (e[1], e[0]))
        c = as_scalar(rem.terms[e] * inv)
        t = MPoly(_XY, {(e[0], e[1] - m): c})
        quo = quo + t
        rem = rem - t * g


def _in_J(h: MPoly, gy: Poly) -> bool:
    # membership in J = g*K[y] for h in K[y]
    return gy.divides(h.to_poly(1))


def verify_lattice_iso_principal(g, *, max_degree: int = 6, samples: int = 12, seed: int = 0) -> bool:
    """Check the lattice maps I -> I ∩ R^d and J -> RJ on a principal J = g*K[y].

    ``R = K[x, y]`` with ``d = d/dx`` so ``R^d = K[y]``. On sampled elements
    up to total degree ``max_degree`` this confirms:

    * an element of K[y] lies in RJ exactly when it lies in J, and every
      x-coefficient of an element of RJ lies in J (so ``RJ ∩ R^d = J``);
    * every element of RJ is rebuilt from elements of ``RJ ∩ R^d`` by peeling
      off its top x-coefficient ``d^n(γ)/n!`` (so ``R(RJ ∩ R^d) = RJ``).
    """
    if isinstance(g, Poly):
        g = MPoly.from_poly(_XY, g, 1)
    elif not isinstance(g, MPoly):
        g = MPoly.constant(_XY, g)
    if not g:
        raise ValueError("g must be nonzero")
    if g.names != _XY or 0 in g.variables():
        raise ValueError("g must be a polynomial in y alone, in K[x, y]")
    gy = g.to_poly(1)
    rng = random.Random(seed)
    dx = MultiDerivation(_XY, [MPoly.constant(_XY, 1), MPoly(_XY)])
    x = MPoly.var(_XY, 0)
    dg = int(gy.degree)
    span = max(max_degree - dg, 0)

    def rand_mpoly(xdeg_max: int, deg: int) -> MPoly:
        terms = {}
        for _ in range(rng.randint(1, 4)):
            i = rng.randint(0, min(xdeg_max, deg))
            j = rng.randint(0, deg - i)
            terms[(i, j)] = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        return MPoly(_XY, terms)

    # sampled basis of RJ up to total degree max_degree, plus random combinations
    ideal = [MPoly(_XY, {(i, j): 1}) * g for i in range(span + 1) for j in range(span + 1 - i)]
    ideal += [rand_mpoly(span, span) * g for _ in range(samples)]
    constants = [MPoly(_XY, {(0, k): 1}) for k in range(max_degree + 1)]
    constants += [MPoly(_XY, {(0, k): 1}) * g for k in range(span + 1)]
    constants += [rand_mpoly(0, max_degree) for _ in range(samples)]
    constants += [rand_mpoly(0, span) * g + rand_mpoly(0, max(dg - 1, 0)) for _ in range(samples)]

    for h in constants:
        in_rj = not _divmod_by_y_poly(h, g)[1]
        if in_rj != _in_J(h, gy):
            return False
    ideal = [e for e in ideal if e]
    for e in ideal:
        if _divmod_by_y_poly(e, g)[1]:
            return False
        for k in range(int(e.degree_in(0)) + 1):
            if not _in_J(e.coefficient_in(0, k), gy):
                return False
        if not dx(e) and not _in_J(e, gy):
            return False

    for gamma in ideal:
        while gamma:
            n = int(gamma.degree_in(0))
            top = gamma
            for _ in range(n):
                top = dx(top)
            top = top * Fraction(1, math.factorial(n))
            if dx(top) or not _in_J(top, gy):
                return False
            gamma = gamma - x ** n * top
    return True
