"""Independent reference computations used to freeze expected values.

Nothing here calls the library's multiplication, normal-form or linear
algebra code; each oracle recomputes from first principles (complex
embeddings, binomial expansions, sympy).
"""

import cmath
from math import comb

import sympy as sp

from orext import Cyclotomic, Poly


def to_complex(c):
    """Embed a rational or cyclotomic scalar into C via zeta_n = exp(2*pi*i/n)."""
    if not isinstance(c, Cyclotomic):
        return complex(c)
    z = cmath.exp(2j * cmath.pi / c.conductor)
    return sum(complex(a) * z**k for k, a in enumerate(c.coeffs))


def brute_order(q, limit=60):
    """Least m <= limit with q**m == 1, by repeated multiplication."""
    p = q
    for m in range(1, limit + 1):
        if p == 1:
            return m
        p = p * q
    return None


def sigma_power(q, b, n):
    """sigma^n(x) by composing x -> q*x + b with itself n times."""
    s = Poly.x()
    step = Poly({1: q, 0: b})
    for _ in range(n):
        s = step(s)
    return s


def iterated_d(dx, a, n):
    """d^n(a) for sigma = id, using the chain rule p' * dx."""
    out = [a]
    for _ in range(n):
        out.append(out[-1].derivative() * dx)
    return out


def theta_pow_times(dx, a, n):
    """Left form of theta^n * a: coefficient of theta^i is C(n, i) d^(n-i)(a)."""
    ders = iterated_d(dx, a, n)
    return [ders[n - i] * comb(n, i) for i in range(n + 1)]


def right_form_binomial(dx, left_coeffs):
    """Right form sum theta^i c_i of sum a_n theta^n for sigma = id.

    Uses a*theta^n = sum_k (-1)^k C(n, k) theta^(n-k) d^k(a).
    """
    top = len(left_coeffs)
    out = [Poly() for _ in range(top)]
    for n, a in enumerate(left_coeffs):
        ders = iterated_d(dx, a, n)
        for k in range(n + 1):
            out[n - k] = out[n - k] + ders[k] * (comb(n, k) * (-1) ** k)
    while out and not out[-1]:
        out.pop()
    return out


def lcs_dims_sympy(images, names=("x", "y")):
    """Lower central series dimensions of g = span(V) + K*theta via sympy.

    ``images`` are sympy expressions giving d(var) for each variable.
    V is the union of the d-orbits of the variables; the bracket is
    [(u, s), (w, t)] = s*d(w) - t*d(u).
    """
    syms = sp.symbols(names)

    def d(e):
        return sp.expand(sum(sp.diff(e, v) * im for v, im in zip(syms, images)))

    orbit = []
    for v in syms:
        e = sp.Integer(1) * v
        while e != 0:
            if e not in orbit:
                orbit.append(e)
            e = d(e)

    def span_dim(exprs):
        exprs = [sp.Poly(e, *syms) for e in exprs if e != 0]
        if not exprs:
            return 0, []
        monos = sorted({m for p in exprs for m in p.monoms()})
        M = sp.Matrix([[p.coeff_monomial(m) for m in monos] for p in exprs])
        rref, piv = M.T.rref()
        return len(piv), [exprs[i].as_expr() for i in piv]

    dim_h, basis = span_dim(orbit)
    g = [(h, 0) for h in basis] + [(sp.Integer(0), 1)]
    dims = [dim_h + 1]
    term = g
    while True:
        brs = [s * d(w) - t * d(u) for u, s in g for w, t in term]
        n, new = span_dim(brs)
        if n == 0:
            return dim_h, dims
        dims.append(n)
        term = [(h, 0) for h in new]
