"""
======================
Checkable certificates
======================

For ``d = x^2 d/dx`` and ``m = <x - 1>`` we build three kinds of evidence
and re-verify each one.
"""

# %%

from orext import (
    DerivationSpec,
    Poly,
    SkewPoly,
    chain_certificate,
    essentialize,
    maximality_certificate,
    membership_I,
    parse_skew,
)

spec = DerivationSpec.ordinary(Poly({2: 1}))

# %%
# Pushing into S*t
# ----------------
#
# ``s*u`` lands in ``S*t`` but outside ``I = S*(x - 1)*t``.

u = parse_skew("x - 1", spec)
w = essentialize(u, 1)
print("s   =", w.multiplier)
print("s*u =", w.product)
print("in I?", membership_I(w.product, 1), "| verified:", w.verify())

# %%
# A descending chain
# ------------------
#
# ``L_j = S*<f^j> + S*t`` with ``f = x^2`` never stabilizes.

cert = chain_certificate(spec.dx, 1, 4)
for link in cert.links:
    print(link.j, link.element, link.facts)
print("verified:", cert.verify())

# %%
# Maximality cofactors
# --------------------
#
# ``u*g = 1`` modulo ``S*m`` shows ``g`` generates everything modulo ``S*m``.

t = SkewPoly.theta(spec)
for g in (t, t + Poly.x(), Poly({2: 1}) * t + 1):
    c = maximality_certificate(1, g, 8)
    print(f"g = {g}: u = {c.cofactor} (degree {c.search_degree}), verified {c.verify()}")
