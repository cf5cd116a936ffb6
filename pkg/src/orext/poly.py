"""Sparse commutative polynomials over exact scalars.

:class:`Poly` is univariate in ``x``; :class:`MPoly` is multivariate with a
fixed tuple of variable names. Both are immutable, store no zero
coefficients, and support the usual arithmetic operators. Plain ints,
Fractions and Cyclotomics are accepted wherever a polynomial is expected.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .scalar import Cyclotomic, Scalar, as_scalar, scalar_inverse, scalar_str

__all__ = ["MPoly", "Poly", "poly_gcd"]

NEG_INF = -math.inf


def _is_scalar(v) -> bool:
    return isinstance(v, (int, Rational, Cyclotomic)) and not isinstance(v, bool)


def _coef_str(c: Scalar, mono: str) -> tuple[bool, str]:
    """Sign flag and body for the term ``c * mono``."""
    if isinstance(c, Cyclotomic):
        body = f"({scalar_str(c)})"
        return False, body if not mono else f"{body}*{mono}"
    neg = c < 0
    a = -c if neg else c
    if not mono:
        return neg, str(a)
    if a == 1:
        return neg, mono
    return neg, f"{a}*{mono}"


def _join_terms(terms: list[tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


class Poly:
    """Univariate polynomial ``sum c_i x^i`` stored as ``{i: c_i}``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | Sequence[object] | None = None):
        terms: dict[int, Scalar] = {}
        if coeffs is None:
            items: Iterable = ()
        elif isinstance(coeffs, Mapping):
            items = coeffs.items()
        else:
            items = enumerate(coeffs)
        for e, c in items:
            if e < 0:
                raise ValueError("negative exponent")
            e = int(e)
            terms[e] = as_scalar(terms.get(e, 0) + as_scalar(c))
        self._c = {e: c for e, c in terms.items() if c}
        self._hash = None

    # constructors

    @classmethod
    def _raw(cls, terms: dict[int, Scalar]) -> "Poly":
        p = cls.__new__(cls)
        p._c = {e: c for e, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def x(cls) -> "Poly":
        return cls._raw({1: Fraction(1)})

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls._raw({0: as_scalar(c)})

    @classmethod
    def monomial(cls, e: int, c=1) -> "Poly":
        return cls._raw({e: as_scalar(c)})

    @classmethod
    def coerce(cls, v) -> "Poly":
        if isinstance(v, Poly):
            return v
        if _is_scalar(v):
            return cls.constant(v)
        if isinstance(v, str):
            from .parse import parse_poly

            p = parse_poly(v)
            if not isinstance(p, Poly):
                raise ValueError(f"{v!r} is not a polynomial in x")
            return p
        raise TypeError(f"cannot interpret {v!r} as a polynomial")

    # inspection

    @property
    def terms(self) -> dict[int, Scalar]:
        return dict(self._c)

    @property
    def degree(self):
        """Degree in x; ``-math.inf`` for the zero polynomial."""
        return max(self._c) if self._c else NEG_INF

    def coeff(self, e: int) -> Scalar:
        return self._c.get(e, Fraction(0))

    def coeffs(self) -> list[Scalar]:
        """Dense coefficient list, constant term first."""
        if not self._c:
            return []
        return [self.coeff(i) for i in range(self.degree + 1)]

    @property
    def leading_coefficient(self) -> Scalar:
        return self._c[self.degree] if self._c else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return not self._c or set(self._c) == {0}

    def __bool__(self):
        return bool(self._c)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, Poly):
            if not _is_scalar(other):
                return NotImplemented
            other = Poly.constant(other)
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = as_scalar(out[e] + c) if e in out else c
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: as_scalar(-c) for e, c in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            if not _is_scalar(other):
                return NotImplemented
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return Poly.constant(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not _is_scalar(other):
                return NotImplemented
            c = as_scalar(other)
            return Poly._raw({e: as_scalar(v * c) for e, v in self._c.items()})
        out: dict[int, Scalar] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                e = e1 + e2
                t = c1 * c2
                out[e] = out[e] + t if e in out else t
        return Poly._raw({e: as_scalar(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = Poly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other):
        other = Poly.coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = dict(self._c)
        quo: dict[int, Scalar] = {}
        dg, lc = other.degree, other.leading_coefficient
        inv = scalar_inverse(lc)
        while rem:
            top = max(rem)
            if top < dg:
                break
            c = as_scalar(rem[top] * inv)
            shift = top - dg
            quo[shift] = c
            for e, oc in other._c.items():
                k = e + shift
                v = as_scalar(rem.get(k, 0) - c * oc)
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return Poly._raw(quo), Poly._raw(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        return self * scalar_inverse(other)

    def divides(self, other) -> bool:
        """True iff ``self`` divides ``other`` in K[x]."""
        other = Poly.coerce(other)
        if not self:
            return not other
        return not (other % self)

    def monic(self) -> "Poly":
        if not self:
            return self
        return self / self.leading_coefficient

    def derivative(self) -> "Poly":
        return Poly._raw({e - 1: as_scalar(c * e) for e, c in self._c.items() if e})

    def __call__(self, value):
        """Evaluate at a scalar, or compose with a polynomial."""
        if isinstance(value, Poly):
            result = Poly()
            for i in range(self.degree, -1, -1) if self._c else ():
                result = result * value + self.coeff(i)
            return result
        v = as_scalar(value)
        acc: Scalar = Fraction(0)
        for i in range(self.degree, -1, -1) if self._c else ():
            acc = acc * v + self.coeff(i)
        return as_scalar(acc)

    # comparison / display

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._c == other._c
        if _is_scalar(other):
            return self._c == ({0: as_scalar(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def to_str(self, var: str = "x") -> str:
        terms = []
        for e in sorted(self._c, reverse=True):
            mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            terms.append(_coef_str(self._c[e], mono))
        return _join_terms(terms)

    def __str__(self):
        return self.to_str()


def poly_gcd(a, b) -> Poly:
    """Monic gcd in K[x]; ``gcd(0, 0) = 0``."""
    a, b = Poly.coerce(a), Poly.coerce(b)
    while b:
        a, b = b, a % b
    return a.monic()


class MPoly:
    """Multivariate polynomial over exact scalars.

    ``terms`` maps exponent tuples (one entry per variable in ``names``) to
    nonzero coefficients.
    """

    __slots__ = ("names", "_c", "_hash")

    def __init__(self, names: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.names = tuple(names)
        n = len(self.names)
        out: dict[tuple, Scalar] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != n or min(e, default=0) < 0:
                raise ValueError(f"bad exponent vector {e} for {n} variables")
            c = as_scalar(c)
            out[e] = as_scalar(out[e] + c) if e in out else c
        self._c = {e: c for e, c in out.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, names, terms) -> "MPoly":
        p = cls.__new__(cls)
        p.names = names
        p._c = {e: c for e, c in terms.items() if c}
        p._hash = None
        return p

    @classmethod
    def var(cls, names: Sequence[str], i: int | str) -> "MPoly":
        names = tuple(names)
        if isinstance(i, str):
            i = names.index(i)
        e = [0] * len(names)
        e[i] = 1
        return cls._raw(names, {tuple(e): Fraction(1)})

    @classmethod
    def constant(cls, names: Sequence[str], c) -> "MPoly":
        names = tuple(names)
        return cls._raw(names, {(0,) * len(names): as_scalar(c)})

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def terms(self) -> dict[tuple, Scalar]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._c)

    @property
    def total_degree(self):
        return max((sum(e) for e in self._c), default=NEG_INF)

    def variables(self) -> set[int]:
        """Indices of the variables that actually occur."""
        return {i for e in self._c for i, k in enumerate(e) if k}

    def degree_in(self, i: int):
        return max((e[i] for e in self._c), default=NEG_INF)

    def _lift(self, other) -> "MPoly | None":
        if isinstance(other, MPoly):
            if other.names != self.names:
                raise ValueError("polynomials live in different rings")
            return other
        if _is_scalar(other):
            return MPoly.constant(self.names, other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._c)
        for e, c in o._c.items():
            out[e] = as_scalar(out[e] + c) if e in out else c
        return MPoly._raw(self.names, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.names, {e: as_scalar(-c) for e, c in self._c.items()})

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
        out: dict[tuple, Scalar] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in o._c.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t = c1 * c2
                out[e] = out[e] + t if e in out else t
        return MPoly._raw(self.names, {e: as_scalar(c) for e, c in out.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = MPoly.constant(self.names, 1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def diff(self, i: int | str) -> "MPoly":
        if isinstance(i, str):
            i = self.names.index(i)
        out = {}
        for e, c in self._c.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = as_scalar(c * e[i])
        return MPoly._raw(self.names, out)

    def coefficient_in(self, i: int, k: int) -> "MPoly":
        """Coefficient of ``names[i]**k`` as a polynomial in the other variables."""
        out = {}
        for e, c in self._c.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return MPoly._raw(self.names, out)

    def to_poly(self, i: int = 0) -> Poly:
        """View as a univariate Poly in ``names[i]``; other variables must be absent."""
        if self.variables() - {i}:
            raise ValueError("polynomial involves other variables")
        return Poly({e[i]: c for e, c in self._c.items()})

    @classmethod
    def from_poly(cls, names: Sequence[str], p: Poly, i: int = 0) -> "MPoly":
        names = tuple(names)
        out = {}
        for e, c in p.terms.items():
            v = [0] * len(names)
            v[i] = e
            out[tuple(v)] = c
        return cls._raw(names, out)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.names == other.names and self._c == other._c
        if _is_scalar(other):
            return self == MPoly.constant(self.names, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.names, frozenset(self._c.items())))
        return self._hash

    def __repr__(self):
        return f"MPoly({self})"

    def __str__(self):
        terms = []
        for e in sorted(self._c, key=lambda e: (sum(e), e), reverse=True):
            factors = []
            for name, k in zip(self.names, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            terms.append(_coef_str(self._c[e], "*".join(factors)))
        return _join_terms(terms)
