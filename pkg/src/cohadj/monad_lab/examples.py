"""Small monads and adjunctions used as fixtures and as CLI literals."""
from __future__ import annotations

from .categories import FinAdjunction, FinFunctor, FinMonad, chain_poset, identity_monad, poset_category, poset_monad


def closure2() -> FinMonad:
    """``t(0) = t(1) = 1`` on ``0 < 1``."""
    return poset_monad(chain_poset(2), {"0": "1", "1": "1"})


def closure3() -> FinMonad:
    """``0 ↦ 1, 1 ↦ 1, 2 ↦ 2`` on ``0 < 1 < 2``."""
    return poset_monad(chain_poset(3), {"0": "1", "1": "1", "2": "2"})


def identity3() -> FinMonad:
    return identity_monad(chain_poset(3))


_SUBSETS = {"0": set(), "a": {"a"}, "b": {"b"}, "1": {"a", "b"}}


def lattice() -> FinMonad:
    """``x ↦ x ∨ a`` on the four-element Boolean lattice."""
    c = poset_category(list(_SUBSETS), lambda x, y: _SUBSETS[x] <= _SUBSETS[y])
    join = {x: next(k for k, v in _SUBSETS.items() if v == _SUBSETS[x] | {"a"}) for x in _SUBSETS}
    return poset_monad(c, join)


def galois() -> FinAdjunction:
    """``f ⊣ u`` between ``3 = {0<1<2}`` (as ``B``) and ``2 = {0<1}`` (as ``A``):
    ``f = (0,1,2) ↦ (0,0,1)`` and ``u = (0,1) ↦ (1,2)``."""
    A, B = chain_poset(2), chain_poset(3)
    name = lambda x, y: f"{x}<={y}"  # noqa: E731
    fo = {"0": "0", "1": "0", "2": "1"}
    uo = {"0": "1", "1": "2"}
    f = FinFunctor(B, A, fo, {m: name(fo[x], fo[y]) for m, (x, y) in B.morphisms.items()})
    u = FinFunctor(A, B, uo, {m: name(uo[x], uo[y]) for m, (x, y) in A.morphisms.items()})
    eta = {b: name(b, uo[fo[b]]) for b in B.objects}
    eps = {a: name(fo[uo[a]], a) for a in A.objects}
    return FinAdjunction(A, B, f, u, eta, eps)


MONADS = {"identity3": identity3, "closure2": closure2, "closure3": closure3, "lattice": lattice}
