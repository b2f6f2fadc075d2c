"""Exact computations with twisted graded Hecke algebras.

For more details about this package, please refer to README.md.
"""

from __future__ import annotations

from .algebra import AlgebraElement, CrossedProductAlgebra, HeckeAlgebra, Monomial
from .catalog import builtin_group, cyclic_sl2_group, diagonal_group, symmetric_group
from .classify import FormFamily, SkewForm, classify_all, propagate_family, verify_family
from .cocycle import TwoCocycle, elementary_abelian_cocycle, symmetric_group_cocycle, trivial_cocycle
from .cyclo import Cyclotomic, root_of_unity
from .exceptions import TghaError
from .lusztig import root_system, verify_phi_isomorphism
from .matgroup import FiniteMatrixGroup, generate_group

__all__ = [
    "AlgebraElement",
    "CrossedProductAlgebra",
    "Cyclotomic",
    "FiniteMatrixGroup",
    "FormFamily",
    "HeckeAlgebra",
    "Monomial",
    "SkewForm",
    "TghaError",
    "TwoCocycle",
    "builtin_group",
    "classify_all",
    "cyclic_sl2_group",
    "diagonal_group",
    "elementary_abelian_cocycle",
    "generate_group",
    "propagate_family",
    "root_of_unity",
    "root_system",
    "symmetric_group",
    "symmetric_group_cocycle",
    "trivial_cocycle",
    "verify_family",
    "verify_phi_isomorphism",
]
