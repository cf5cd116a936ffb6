"""Exact computer algebra for Ore extensions K[x][theta; sigma, d].

Skew polynomial arithmetic, derivation analysis, normal-form classification,
the diamond-property decision, and checkable witnesses (essential-extension
multipliers, non-Artinian chains, maximality cofactors).
"""

from .classify import (
    DiamondVerdict,
    IsoData,
    NormalForm,
    NormalFormKind,
    OreSpec,
    Reason,
    decide_diamond,
    normalize,
    sigma_order,
)
from .commalg import (
    DerivationSpec,
    LieDatum,
    LNDKind,
    LNDResult,
    MultiDerivation,
    d_apply,
    d_ideal_closure,
    d_primitive_witness,
    is_d_simple,
    is_locally_nilpotent_uni,
    lie_datum,
    lnd_check_multi,
    sigma_apply,
    sigma_inverse_apply,
    verify_lattice_iso_principal,
)
from .ore import (
    ChainCertificate,
    EssentialWitness,
    MaximalityCertificate,
    SkewPoly,
    chain_certificate,
    essentialize,
    from_right_form,
    maximality_certificate,
    membership_I,
    module_action,
    reduce_mod_Sm,
    right_divide,
    right_normal_form,
    skew_mul,
)
from .parse import ParseError, parse_derivation, parse_mpoly, parse_poly, parse_scalar, parse_skew
from .poly import MPoly, Poly, poly_gcd
from .scalar import (
    Cyclotomic,
    Scalar,
    as_scalar,
    root_of_unity_order,
    scalar_arith,
    scalar_str,
    zeta,
)

__version__ = "0.1.0"
