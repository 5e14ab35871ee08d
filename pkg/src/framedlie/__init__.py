"""Symbolic kernel for the free framed Lie algebra and the commutation
relations of the covariant derivative."""
from .free_lie import (
    GElement,
    Monomial,
    bracket,
    diamond,
    g,
    g_degree,
    gen,
    generators,
    hall_basis,
    is_hall,
    monomial_order,
)
from .identities import IdentityDocument, commutation_identity, render, rho_opaque
from .maps import (
    K_inverse,
    K_map,
    PBWNormalForm,
    e_map,
    kappa_apply,
    pbw_normal_form,
    r_apply,
    rho_apply,
    t_map,
    theorem_check,
)
from .tensor import (
    JElement,
    SplitPair,
    TElement,
    concat,
    coproduct_splits,
    from_g,
    j_embed,
    make_lambda,
    nabla,
    nabla_hom,
    nabla_on_j,
    t_word,
    triple,
    unit,
)
from .exprio import format_element, parse, elaborate, read_element

__version__ = "0.1.0"

__all__ = [
    "GElement",
    "Monomial",
    "bracket",
    "diamond",
    "g",
    "g_degree",
    "gen",
    "generators",
    "hall_basis",
    "is_hall",
    "monomial_order",
    "K_inverse",
    "K_map",
    "PBWNormalForm",
    "e_map",
    "kappa_apply",
    "pbw_normal_form",
    "r_apply",
    "rho_apply",
    "t_map",
    "theorem_check",
    "JElement",
    "SplitPair",
    "TElement",
    "concat",
    "coproduct_splits",
    "from_g",
    "j_embed",
    "make_lambda",
    "nabla",
    "nabla_hom",
    "nabla_on_j",
    "t_word",
    "triple",
    "unit",
    "IdentityDocument",
    "commutation_identity",
    "render",
    "rho_opaque",
    "format_element",
    "parse",
    "elaborate",
    "read_element",
]
