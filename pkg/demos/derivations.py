"""
====================================
Derivations of K[x] and their ideals
====================================

A derivation of ``K[x]`` is fixed by ``f = d(x)``. We look at local
nilpotency, d-stable ideals, and a maximal ideal free of d-ideals.
"""

# %%

from orext import (
    DerivationSpec,
    Poly,
    d_apply,
    d_ideal_closure,
    d_primitive_witness,
    is_d_simple,
    is_locally_nilpotent_uni,
)

for f in (Poly.constant(5), Poly.x(), Poly({2: 1}), Poly([1, 0, 1])):
    spec = DerivationSpec.ordinary(f)
    print(
        f"d(x) = {f}:",
        "locally nilpotent" if is_locally_nilpotent_uni(spec) else "not locally nilpotent",
        "| d-simple" if is_d_simple(spec) else "| not d-simple",
        f"| witness alpha = {d_primitive_witness(spec)}",
    )

# %%
# Closing an ideal under d
# ------------------------
#
# The smallest d-stable ideal containing ``g`` is generated by the fixed
# point of ``h -> gcd(h, d(h))``.

spec = DerivationSpec.ordinary(Poly({2: 1}))  # d = x^2 d/dx
g = Poly([-1, 0, 1]) * Poly.x() ** 3  # x^3 (x^2 - 1)
print("closure of", g, "is", d_ideal_closure(g, spec))

# %%
# A sigma-derivation
# ------------------
#
# With ``sigma(x) = q*x`` the rule becomes ``d(uv) = sigma(u) d(v) + d(u) v``.

qspec = DerivationSpec(2, 0, 1)
print("d(x^2) =", d_apply(qspec, Poly({2: 1})))  # (q + 1) x
