"""
======================================
Lie data and ideal lattices in K[y][x]
======================================

A locally nilpotent derivation of ``K[x_1..x_n]`` yields a finite-dimensional
nilpotent Lie algebra ``h + K*t``. We also check on principal ideals that
``I -> I ∩ K[y]`` and ``J -> R*J`` are inverse to each other for ``d = d/dx``.
"""

# %%

from orext import DerivationSpec, Poly, lie_datum, lnd_check_multi, parse_derivation, verify_lattice_iso_principal

d = parse_derivation("d(x)=y; d(y)=1")
print(lnd_check_multi(d, 32))
ld = lie_datum(d)
print("V =", [str(v) for v in ld.v_set])
print("dim h =", ld.dim_h, "| lower central series", ld.lcs_dims, "| class", ld.nilpotency_class)

heis = lie_datum(DerivationSpec.ordinary(2))
print("Heisenberg: dim g =", heis.dim_g, "| class", heis.nilpotency_class)

# %%
# Principal ideals
# ----------------
#
# Polynomials here are read in the variable ``y``.

for g in (Poly.x(), Poly([1, 0, 1]), Poly([-2, 0, 0, 1])):
    print(g.to_str("y"), verify_lattice_iso_principal(g))
