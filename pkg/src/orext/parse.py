"""Text syntax for scalars, polynomials, skew polynomials and derivations.

Grammar (whitespace is ignored)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("+" | "-") unary | power
    power  := atom ("^" INT)?
    atom   := INT | "zeta" "(" INT ")" | NAME | "(" expr ")"

Division is only allowed by nonzero scalars. In skew polynomials ``t``
stands for theta. Derivations are written
``sigma: q=<scalar>, b=<scalar>; d(x)=<poly>`` (the ``sigma`` clause is
optional) or, for several variables, ``d(x)=y; d(y)=1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .commalg import DerivationSpec, MultiDerivation
from .poly import MPoly, Poly
from .scalar import as_scalar, scalar_inverse, zeta

__all__ = [
    "ParseError",
    "parse_derivation",
    "parse_mpoly",
    "parse_poly",
    "parse_scalar",
    "parse_skew",
]

MAX_EXPONENT = 10_000

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    """Syntax error; ``offset`` is the byte offset of the offending token."""

    def __init__(self, message: str, text: str, offset: int):
        self.message = message
        self.text = text
        self.offset = offset
        super().__init__(f"{message} at offset {offset}: {text!r}")


@dataclass
class _Tok:
    kind: str  # "int", "name", "op", "end"
    value: str
    offset: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(_Tok("int", m.group(1), start))
        elif m.group(2):
            toks.append(_Tok("name", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", text, _byte_offset(text, start))
            toks.append(_Tok("op", ch, start))
        pos = m.end()
    toks.append(_Tok("end", "", len(text)))
    return toks


def _byte_offset(text: str, idx: int) -> int:
    return len(text[:idx].encode("utf-8"))


class _Algebra:
    """Value domain for the evaluator."""

    def const(self, c):
        raise NotImplementedError

    def var(self, name: str):
        raise NotImplementedError

    def is_scalar(self, v) -> bool:
        raise NotImplementedError

    def scalar_of(self, v):
        raise NotImplementedError

    def mul(self, a, b):
        return a * b


class _Parser:
    def __init__(self, text: str, algebra: _Algebra):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.alg = algebra

    def error(self, msg: str, tok: Optional[_Tok] = None):
        tok = tok or self.toks[self.i]
        raise ParseError(msg, self.text, _byte_offset(self.text, tok.offset))

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value: str) -> _Tok:
        t = self.peek()
        if t.kind != "op" or t.value != value:
            self.error(f"expected {value!r}")
        return self.take()

    def parse(self):
        if self.peek().kind == "end":
            self.error("empty expression")
        v = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected token {self.peek().value!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek().kind == "op" and self.peek().value in "+-":
            op = self.take().value
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek().kind == "op" and self.peek().value in "*/":
            op = self.take()
            w = self.unary()
            if op.value == "*":
                v = self.alg.mul(v, w)
            else:
                if not self.alg.is_scalar(w):
                    self.error("can only divide by a scalar", op)
                s = self.alg.scalar_of(w)
                if not s:
                    self.error("division by zero", op)
                v = v * scalar_inverse(s)
        return v

    def unary(self):
        t = self.peek()
        if t.kind == "op" and t.value in "+-":
            self.take()
            v = self.unary()
            return -v if t.value == "-" else v
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek().kind == "op" and self.peek().value == "^":
            self.take()
            t = self.peek()
            if t.kind != "int":
                self.error("exponent must be a non-negative integer")
            self.take()
            e = int(t.value)
            if e > MAX_EXPONENT:
                self.error(f"exponent overflow (limit {MAX_EXPONENT})", t)
            if self.alg.is_scalar(v):
                return self.alg.const(as_scalar(self.alg.scalar_of(v) ** e))
            v = v ** e
        return v

    def atom(self):
        t = self.take()
        if t.kind == "int":
            return self.alg.const(Fraction(int(t.value)))
        if t.kind == "name":
            if t.value == "zeta":
                self.expect("(")
                n = self.take()
                if n.kind != "int" or int(n.value) < 1:
                    self.error("zeta needs a positive integer conductor", n)
                self.expect(")")
                return self.alg.const(zeta(int(n.value)))
            try:
                return self.alg.var(t.value)
            except KeyError:
                self.i -= 1
                self.error(f"unknown variable {t.value!r}")
        if t.kind == "op" and t.value == "(":
            v = self.expr()
            self.expect(")")
            return v
        self.i -= 1
        self.error("expected a number, variable or '('" if t.kind != "end" else "unexpected end of input")


class _ScalarAlg(_Algebra):
    def const(self, c):
        return as_scalar(c)

    def var(self, name):
        raise KeyError(name)

    def is_scalar(self, v):
        return True

    def scalar_of(self, v):
        return v


class _PolyAlg(_Algebra):
    def __init__(self, var: str = "x"):
        self.name = var

    def const(self, c):
        return Poly.constant(c)

    def var(self, name):
        if name != self.name:
            raise KeyError(name)
        return Poly.x()

    def is_scalar(self, v):
        return v.is_constant()

    def scalar_of(self, v):
        return v.coeff(0)


class _MPolyAlg(_Algebra):
    def __init__(self, names: Sequence[str]):
        self.names = tuple(names)

    def const(self, c):
        return MPoly.constant(self.names, c)

    def var(self, name):
        if name not in self.names:
            raise KeyError(name)
        return MPoly.var(self.names, name)

    def is_scalar(self, v):
        return v.is_constant()

    def scalar_of(self, v):
        return v.terms.get((0,) * len(self.names), Fraction(0))


class _SkewAlg(_Algebra):
    def __init__(self, spec: Optional[DerivationSpec]):
        self.spec = spec
        self.base = spec or DerivationSpec()

    def const(self, c):
        from .ore import SkewPoly

        return SkewPoly([c], self.base)

    def var(self, name):
        from .ore import SkewPoly

        if name == "x":
            return SkewPoly([Poly.x()], self.base)
        if name == "t":
            return SkewPoly.theta(self.base)
        raise KeyError(name)

    def is_scalar(self, v):
        return v.degree <= 0 and v.constant_coefficient.is_constant()

    def scalar_of(self, v):
        return v.constant_coefficient.coeff(0)

    def mul(self, a, b):
        if self.spec is None and a.degree > 0 and any(not c.is_constant() for c in b.coeffs):
            raise _NeedsSpec()
        return a * b


class _NeedsSpec(Exception):
    pass


def _run(text: str, alg: _Algebra):
    return _Parser(text, alg).parse()


def parse_scalar(text: str):
    """Parse an exact scalar such as ``3/2`` or ``1 + zeta(3)^2``."""
    return _run(text, _ScalarAlg())


def parse_skew(text: str, spec: Optional[DerivationSpec] = None):
    """Parse a skew polynomial in ``x`` and ``t`` (theta).

    Products are evaluated in K[x][t; sigma, d] for the given ``spec``.
    Without a spec, only input in which no ``t`` has to be moved past an
    ``x`` is accepted.
    """
    try:
        return _run(text, _SkewAlg(spec))
    except _NeedsSpec:
        raise ParseError("commuting t past x needs a derivation", text, 0) from None


def parse_poly(text: str, spec: Optional[DerivationSpec] = None):
    """Parse a polynomial in ``x``; returns a :class:`SkewPoly` when ``t`` occurs."""
    if any(t.kind == "name" and t.value == "t" for t in _tokenize(text)):
        return parse_skew(text, spec)
    return _run(text, _PolyAlg("x"))


def parse_mpoly(text: str, names: Sequence[str]) -> MPoly:
    """Parse a polynomial in the given variables, e.g. ``x1^2*x2 + 1``."""
    return _run(text, _MPolyAlg(names))


_D_CLAUSE = re.compile(r"^\s*d\s*\(\s*([A-Za-z_][A-Za-z_0-9]*)\s*\)\s*=(.*)$", re.S)
_SIGMA_CLAUSE = re.compile(r"^\s*sigma\s*:(.*)$", re.S)


def _parse_part(fn: Callable, part: str, text: str, start: int):
    # re-anchor offsets of errors inside a clause to the full input
    try:
        return fn(part)
    except ParseError as exc:
        raise ParseError(exc.message, text, _byte_offset(text, start) + exc.offset) from None


def parse_derivation(text: str):
    """Parse a derivation.

    Returns a :class:`DerivationSpec` for a single variable named ``x`` and a
    :class:`MultiDerivation` (sigma = id) for several variables.
    """
    q: object = Fraction(1)
    b: object = Fraction(0)
    images: dict[str, tuple[str, int]] = {}
    have_sigma = False
    pos = 0
    for clause in text.split(";"):
        cstart, pos = pos, pos + len(clause) + 1
        if not clause.strip():
            continue
        m = _SIGMA_CLAUSE.match(clause)
        if m:
            have_sigma = True
            ppos = cstart + m.start(1)
            for part in m.group(1).split(","):
                pstart, ppos = ppos, ppos + len(part) + 1
                if not part.strip():
                    continue
                raw_key, sep, val = part.partition("=")
                key = raw_key.strip()
                if not sep or key not in ("q", "b"):
                    raise ParseError(
                        "expected q=<scalar> or b=<scalar>", text, _byte_offset(text, pstart)
                    )
                value = _parse_part(parse_scalar, val, text, pstart + len(raw_key) + 1)
                if key == "q":
                    q = value
                else:
                    b = value
            continue
        m = _D_CLAUSE.match(clause)
        if not m:
            raise ParseError(
                "expected d(<var>)=<poly> or sigma: ...", text, _byte_offset(text, cstart)
            )
        if m.group(1) in images:
            raise ParseError(f"d({m.group(1)}) given twice", text, _byte_offset(text, cstart))
        images[m.group(1)] = (m.group(2), cstart + m.start(2))
    if not images:
        raise ParseError("no d(...) clause", text, 0)
    names = tuple(images)
    if names == ("x",):
        body, start = images["x"]
        dx = _parse_part(lambda s: _run(s, _PolyAlg("x")), body, text, start)
        return DerivationSpec(q, b, dx)
    if have_sigma and (q != 1 or b != 0):
        raise ParseError("sigma-derivations are univariate only", text, 0)
    return MultiDerivation(
        names,
        [_parse_part(lambda s: parse_mpoly(s, names), images[n][0], text, images[n][1]) for n in names],
    )
