"""
=====================================
Normal forms and the diamond decision
=====================================

Every ``K[x][y; sigma, d]`` is isomorphic to one of five normal forms. The
change of variables is emitted together with the target relation and
replayed inside the original ring.
"""

# %%

from orext import DerivationSpec, Poly, decide_diamond, normalize, zeta

cases = [
    DerivationSpec(1, 0, 0),
    DerivationSpec.ordinary(Poly({2: 1})),
    DerivationSpec(2, 0, 0),
    DerivationSpec(2, 2, 1),
    DerivationSpec(zeta(3), 1, Poly.x()),
    DerivationSpec(1, 4, Poly.x()),
]
for spec in cases:
    nf = normalize(spec)
    print(f"{spec}\n    {nf.kind.value}: x' = {nf.iso.x_new}, y' = {nf.iso.y_new}; replay {nf.replay()}")

# %%
# The verdict
# -----------
#
# Roots of unity and locally nilpotent derivations give a positive answer.
# Everything else is negative, including every infinite-order shift.

for spec in cases:
    v = decide_diamond(spec)
    print(f"{'yes' if v.satisfied else 'no ':3}  {v.reason_text:22}  {spec}")
