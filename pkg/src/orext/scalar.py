"""Exact scalars: rationals and elements of cyclotomic fields Q(zeta_n).

Rationals are plain :class:`fractions.Fraction` values. An element of Q(zeta_n)
is stored as the reduced residue of a polynomial in zeta_n modulo the n-th
cyclotomic polynomial, i.e. a tuple of ``phi(n)`` rational coefficients.

Any cyclotomic result whose residue is a constant collapses back to a
:class:`Fraction`, so ``zeta(4) * zeta(4) == -1`` holds as an identity of
Python values and rationals never carry a stale conductor around.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

__all__ = [
    "Cyclotomic",
    "Scalar",
    "as_scalar",
    "cyclotomic_polynomial",
    "euler_phi",
    "root_of_unity_order",
    "scalar_arith",
    "scalar_inverse",
    "scalar_str",
    "zeta",
]


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _int_poly_divexact(a: list[int], b: list[int]) -> list[int]:
    # exact division of integer polynomials, b monic; coefficients low -> high
    a = list(a)
    q = [0] * (len(a) - len(b) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1]
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    assert not any(a), "cyclotomic division left a remainder"
    return q


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    num = [-1] + [0] * (n - 1) + [1]  # z^n - 1
    for k in range(1, n):
        if n % k == 0:
            num = _int_poly_divexact(num, list(cyclotomic_polynomial(k)))
    return tuple(num)


def _reduce(coeffs: list[Fraction], n: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_polynomial(n)
    k = len(phi) - 1
    c = list(coeffs) + [Fraction(0)] * max(0, k - len(coeffs))
    for i in range(len(c) - 1, k - 1, -1):
        t = c[i]
        if t:
            base = i - k
            for j in range(k):
                if phi[j]:
                    c[base + j] -= t * phi[j]
        c[i] = Fraction(0)
    return tuple(c[:k])


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _poly_trim(q), _poly_trim(a[: len(b) - 1])


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    for i, bi in enumerate(b):
        a[i] -= bi
    return _poly_trim(a)


class Cyclotomic:
    """An element of the cyclotomic field Q(zeta_n).

    ``coeffs[k]`` is the coefficient of ``zeta_n**k``; the tuple always has
    length ``euler_phi(n)``. Instances are immutable. Use :func:`zeta` or
    :meth:`make` rather than the constructor when a rational result should
    collapse to :class:`Fraction`.
    """

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs):
        object.__setattr__(self, "conductor", int(conductor))
        object.__setattr__(
            self, "coeffs", _reduce([Fraction(c) for c in coeffs], self.conductor)
        )

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def make(cls, conductor: int, coeffs) -> "Scalar":
        z = cls(conductor, coeffs)
        if not any(z.coeffs[1:]):
            return z.coeffs[0] if z.coeffs else Fraction(0)
        return z

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    # coercion

    def _coerce(self, other) -> Optional[tuple[Fraction, ...]]:
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                raise ValueError(
                    f"cannot mix Q(zeta_{self.conductor}) and Q(zeta_{other.conductor})"
                )
            return other.coeffs
        if isinstance(other, (int, Rational)):
            return (Fraction(other),) + (Fraction(0),) * (len(self.coeffs) - 1)
        return None

    # arithmetic

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic.make(self.conductor, [a + b for a, b in zip(self.coeffs, o)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic.make(self.conductor, [-a for a in self.coeffs])

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic.make(self.conductor, [a - b for a, b in zip(self.coeffs, o)])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic.make(self.conductor, [b - a for a, b in zip(self.coeffs, o)])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Cyclotomic.make(self.conductor, _poly_mul(list(self.coeffs), list(o)))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        # extended Euclid: s*self + t*phi = 1 (up to a rational unit)
        modulus = [Fraction(c) for c in cyclotomic_polynomial(self.conductor)]
        r0, r1 = modulus, _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r1 is a nonzero constant because phi_n is irreducible
        c = r1[0]
        return Cyclotomic.make(self.conductor, [s / c for s in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if isinstance(other, Cyclotomic):
            return self * other.inverse()
        if not other:
            raise ZeroDivisionError("division by zero")
        return Cyclotomic.make(self.conductor, [a / Fraction(other) for a in self.coeffs])

    def __rtruediv__(self, other):
        if self._coerce(other) is None:
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return as_scalar(self.inverse()) ** (-e)
        result: Scalar = Fraction(1)
        base: Scalar = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # comparison

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.conductor != self.conductor:
                return self.is_rational() and other.is_rational() and self.coeffs[0] == other.coeffs[0]
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Rational)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        return scalar_str(self)


Scalar = Union[Fraction, Cyclotomic]


def zeta(n: int, k: int = 1) -> Scalar:
    """Return ``zeta_n ** k`` for the primitive n-th root of unity ``exp(2 pi i / n)``."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    k %= n
    coeffs = [Fraction(0)] * k + [Fraction(1)]
    return Cyclotomic.make(n, coeffs)


def as_scalar(value) -> Scalar:
    """Coerce ints, Fractions, Cyclotomics and scalar literals to a Scalar."""
    if type(value) is Fraction:
        return value
    if isinstance(value, Cyclotomic):
        return value.coeffs[0] if value.is_rational() else value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        from .parse import parse_scalar

        return parse_scalar(value)
    raise TypeError(f"cannot interpret {value!r} as an exact scalar")


def scalar_inverse(c) -> Scalar:
    c = as_scalar(c)
    if not c:
        raise ZeroDivisionError("division by zero")
    return c.inverse() if isinstance(c, Cyclotomic) else 1 / c


def scalar_arith(a, b, op: str) -> Scalar:
    """Apply ``op`` (one of ``add``, ``sub``, ``mul``, ``div``) to two scalars.

    Rational operands are promoted into the cyclotomic field of the other
    operand. Mixing two different conductors raises :class:`ValueError`;
    ``div`` by zero raises :class:`ZeroDivisionError`.
    """
    a, b = as_scalar(a), as_scalar(b)
    if op == "add":
        return as_scalar(a + b)
    if op == "sub":
        return as_scalar(a - b)
    if op == "mul":
        return as_scalar(a * b)
    if op == "div":
        if not b:
            raise ZeroDivisionError("division by zero")
        if isinstance(b, Cyclotomic):
            return as_scalar(b.inverse() * a)
        return as_scalar(a / b)
    raise ValueError(f"unknown operation {op!r}")


def root_of_unity_order(q) -> Optional[int]:
    """Least ``m >= 1`` with ``q**m == 1``, or ``None`` when q is not a root of unity.

    Torsion units of Q(zeta_n) form the cyclic group generated by -1 and
    zeta_n, so every root of unity there has order dividing lcm(2, n).
    """
    q = as_scalar(q)
    if not q:
        raise ValueError("0 is not a unit")
    if not isinstance(q, Cyclotomic):
        if q == 1:
            return 1
        if q == -1:
            return 2
        return None
    L = math.lcm(2, q.conductor)
    if q ** L != 1:
        return None
    for m in sorted(d for d in range(1, L + 1) if L % d == 0):
        if q ** m == 1:
            return m
    raise AssertionError("unreachable: q**L == 1")


def _fraction_str(c: Fraction) -> str:
    return str(c)


def scalar_str(value) -> str:
    """Render a scalar in the literal syntax accepted by :func:`orext.parse.parse_scalar`."""
    value = as_scalar(value)
    if not isinstance(value, Cyclotomic):
        return _fraction_str(value)
    n = value.conductor
    parts: list[tuple[bool, str]] = []
    for k in range(len(value.coeffs) - 1, -1, -1):
        c = value.coeffs[k]
        if not c:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = _fraction_str(a)
        else:
            z = f"zeta({n})" if k == 1 else f"zeta({n})^{k}"
            body = z if a == 1 else f"{_fraction_str(a)}*{z}"
        parts.append((neg, body))
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out
