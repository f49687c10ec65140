"""The weights ``W₊`` and ``W₋`` as truncated Δ₊-sets, their collages, and
cofibrancy certificates.

Both collages sit inside the squiggle 2-category with the extra object ``∗``
played by ``-``: ``hom(∗,+)`` is a set of squiggles from ``-`` to ``+``,
``hom(+,+)`` is all of ``Adj(+,+)`` (the monad), ``hom(∗,∗)`` holds only the
identity and ``hom(+,∗)`` is empty. The Δ₊-action is composition on the left.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable

from ..computad import _hom_dim
from ..operators import act, degeneracy, face
from ..squiggle import MINUS, PLUS, Squiggle, compose, is_degenerate


@dataclass(frozen=True)
class WeightPresentation:
    name: str
    max_dim: int
    max_width: int
    members: frozenset[Squiggle]  # hom(∗,+) within bounds
    cells: dict[int, tuple[Squiggle, ...]] = field(default_factory=dict)

    def __contains__(self, x: Squiggle) -> bool:
        return x in self.members

    def act(self, m: Squiggle, x: Squiggle) -> Squiggle:
        """The left action of ``m ∈ Adj(+,+)`` on ``x ∈ W(+)``."""
        return compose(m, x)

    def cell_list(self) -> list[Squiggle]:
        return [c for d in sorted(self.cells) for c in self.cells[d]]


def _ends_with_u(x: Squiggle) -> bool:
    # x = a ∘ u for a squiggle a from + to +
    return len(x.word) >= 2 and x.word[-2] == x.dim + 1


@lru_cache(maxsize=None)
def _star_plus(max_dim: int, max_width: int) -> tuple[Squiggle, ...]:
    return tuple(x for d in range(max_dim + 1) for x in _hom_dim(MINUS, PLUS, d, max_width))


def build_weight(which: str, max_dim: int, max_width: int) -> WeightPresentation:
    """``W₋`` is all of ``Adj(-,+) ≅ Δ_t``; ``W₊`` the image of ``Δ₊`` under ``- ∘ u``."""
    xs = _star_plus(max_dim, max_width)
    if which == "Wminus":
        members = frozenset(xs)
    elif which == "Wplus":
        members = frozenset(x for x in xs if _ends_with_u(x))
    else:
        raise ValueError(f"unknown weight {which!r}")
    return custom_weight(which, members, max_dim, max_width)


def custom_weight(name: str, members: Iterable[Squiggle], max_dim: int, max_width: int) -> WeightPresentation:
    members = frozenset(members)
    col = Collage(name, members)
    cells: dict[int, list[Squiggle]] = {}
    for x in sorted(members, key=lambda a: (a.dim, a.width, a.word)):
        if not is_degenerate(x) and col.is_atomic(x):
            cells.setdefault(x.dim, []).append(x)
    return WeightPresentation(name, max_dim, max_width, members,
                              {d: tuple(v) for d, v in cells.items()})


def empty_weight(max_dim: int, max_width: int) -> WeightPresentation:
    return WeightPresentation("empty", max_dim, max_width, frozenset(), {})


@dataclass(frozen=True)
class Collage:
    """The collage of a weight, as a membership test on squiggles."""

    name: str
    star_plus: frozenset[Squiggle]

    def contains(self, a: Squiggle) -> bool:
        pair = (a.dom, a.cod)
        if pair == (PLUS, PLUS):
            return True
        if pair == (MINUS, PLUS):
            return a in self.star_plus
        if pair == (MINUS, MINUS):
            return a.is_identity()
        return False

    __contains__ = contains

    def splits(self, a: Squiggle) -> list[int]:
        """Interior positions where ``a`` is a composite of two collage arrows."""
        top = a.dim + 1
        out = []
        for i in range(1, len(a.word) - 1):
            if a.word[i] in (0, top):
                if self.contains(Squiggle(a.dim, a.word[: i + 1])) and self.contains(Squiggle(a.dim, a.word[i:])):
                    out.append(i)
        return out

    def is_atomic(self, a: Squiggle) -> bool:
        return not a.is_identity() and not self.splits(a)

    def factorisations(self, a: Squiggle) -> int:
        """Number of ways to write ``a`` as a composite of collage atoms."""
        top = a.dim + 1
        cuts = [0] + [i for i in range(1, len(a.word) - 1) if a.word[i] in (0, top)] + [len(a.word) - 1]
        ways = [0] * len(cuts)
        ways[0] = 1
        for j in range(1, len(cuts)):
            for i in range(j):
                if ways[i]:
                    piece = Squiggle(a.dim, a.word[cuts[i] : cuts[j] + 1])
                    if self.contains(piece) and self.is_atomic(piece):
                        ways[j] += ways[i]
        return ways[-1]


def collage(w: WeightPresentation) -> Collage:
    return Collage(w.name, w.members)


def adj_subcategory(a: Squiggle) -> bool:
    """The non-full subcategory of squiggles that ``coll W₋`` is identified with."""
    pair = (a.dom, a.cod)
    return pair in ((PLUS, PLUS), (MINUS, PLUS)) or (pair == (MINUS, MINUS) and a.is_identity())


@dataclass
class CofibrancyCertificate:
    smaller: str
    larger: str
    max_dim: int
    max_width: int
    checked: int = 0
    cells: dict[int, list[Squiggle]] = field(default_factory=dict)
    witnesses: list[str] = field(default_factory=list)
    vertex_surjective: bool | None = None

    @property
    def ok(self) -> bool:
        return not self.witnesses and self.vertex_surjective is not False

    def to_dict(self) -> dict:
        return {
            "smaller": self.smaller,
            "larger": self.larger,
            "maxDim": self.max_dim,
            "maxWidth": self.max_width,
            "checked": self.checked,
            "ok": self.ok,
            "cells": {str(d): [str(c) for c in cs] for d, cs in sorted(self.cells.items())},
            "vertexSurjective": self.vertex_surjective,
            "witnesses": self.witnesses,
        }


def _arrows(max_dim: int, max_width: int) -> list[Squiggle]:
    out = []
    for d in range(max_dim + 1):
        for src, tgt in ((PLUS, PLUS), (MINUS, PLUS), (MINUS, MINUS), (PLUS, MINUS)):
            out.extend(_hom_dim(src, tgt, d, max_width))
    return out


def _closure_witnesses(c: Collage, arrows: list[Squiggle], max_dim: int, max_width: int) -> list[str]:
    bad = []
    members = [a for a in arrows if c.contains(a)]
    by_cod: dict[tuple[int, int], list[Squiggle]] = {}
    for a in members:
        by_cod.setdefault((a.dim, a.word[0]), []).append(a)
    for a in members:
        for i in range(a.dim + 1 if a.dim > 0 else 0):
            fc = act(a, face(i, a.dim))
            if not c.contains(fc):
                bad.append(f"{c.name}: face {i} of {a} is {fc}, not a member")
        if a.dim < max_dim:
            for i in range(a.dim + 1):
                dg = act(a, degeneracy(i, a.dim))
                if not c.contains(dg):
                    bad.append(f"{c.name}: degeneracy {i} of {a} is not a member")
        for b in by_cod.get((a.dim, a.word[-1]), ()):
            if a.width + b.width <= max_width and not c.contains(compose(a, b)):
                bad.append(f"{c.name}: {a} ∘ {b} is not a member")
    return bad


def relative_computad_check(smaller: Collage, larger: Collage, max_dim: int, max_width: int,
                            vertices: bool = False) -> CofibrancyCertificate:
    """Check that ``smaller ↪ larger`` is a relative simplicial computad in bounds.

    Both sides must be simplicial subcategories (closed under faces,
    degeneracies and composites in bounds); every arrow of the larger must
    factor uniquely into its atoms, with atoms closed under degeneracies;
    atoms of the smaller must stay atomic, and arrows of the smaller must
    factor through atoms of the smaller. The new atoms are the cells.
    """
    cert = CofibrancyCertificate(smaller.name, larger.name, max_dim, max_width)
    arrows = _arrows(max_dim, max_width)
    for c in (smaller, larger):
        cert.witnesses += _closure_witnesses(c, arrows, max_dim, max_width)
    for a in arrows:
        if not larger.contains(a):
            if smaller.contains(a):
                cert.witnesses.append(f"{a} lies in {smaller.name} but not in {larger.name}")
            continue
        cert.checked += 1
        if a.is_identity():
            continue
        if larger.factorisations(a) != 1:
            cert.witnesses.append(f"{a} has {larger.factorisations(a)} atomic factorisations")
        atomic = larger.is_atomic(a)
        if atomic and a.dim < max_dim:
            for i in range(a.dim + 1):
                if not larger.is_atomic(act(a, degeneracy(i, a.dim))):
                    cert.witnesses.append(f"degeneracy {i} of the atom {a} is not atomic")
        if smaller.contains(a):
            if smaller.is_atomic(a) and not atomic:
                cert.witnesses.append(f"{a} is atomic in {smaller.name} only")
            for i in larger.splits(a):
                left, right = Squiggle(a.dim, a.word[: i + 1]), Squiggle(a.dim, a.word[i:])
                if not (smaller.contains(left) and smaller.contains(right)):
                    cert.witnesses.append(f"{a} factors in {larger.name} through arrows outside {smaller.name}")
        elif atomic and not is_degenerate(a):
            cert.cells.setdefault(a.dim, []).append(a)
    if vertices:
        zero = [a for a in arrows if a.dim == 0 and (a.dom, a.cod) == (MINUS, PLUS)]
        cert.vertex_surjective = all(smaller.contains(a) for a in zero if larger.contains(a))
        if not cert.vertex_surjective:
            missing = [str(a) for a in zero if larger.contains(a) and not smaller.contains(a)]
            cert.witnesses.append("0-arrows outside the smaller weight: " + ", ".join(missing))
    return cert


def mnd() -> Collage:
    """The monad alone, with ``∗`` isolated."""
    return Collage("Mnd", frozenset())
