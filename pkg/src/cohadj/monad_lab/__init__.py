"""Finite monads, their algebras and weighted cones over their resolutions."""
from .algebras import (canonical_resolution, check_resolution, comparison_functor,
                       conservativity_check, eilenberg_moore, monad_resolution)
from .categories import (FinAdjunction, FinCategory, FinFunctor, FinMonad, chain_poset,
                         check_laws, identity_monad, poset_monad)
from .cones import compare_em, cone_solver
from .weights import build_weight, collage, relative_computad_check

__all__ = [
    "FinAdjunction", "FinCategory", "FinFunctor", "FinMonad", "build_weight",
    "canonical_resolution", "chain_poset", "check_laws", "check_resolution", "collage",
    "compare_em", "comparison_functor", "cone_solver", "conservativity_check",
    "eilenberg_moore", "identity_monad", "monad_resolution", "poset_monad",
    "relative_computad_check",
]
