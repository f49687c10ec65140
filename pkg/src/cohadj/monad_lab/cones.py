"""Weighted cones over the monad resolution, solved by exhaustive search, and
their comparison with Eilenberg-Moore algebras.

A ``W₋``-cone with vertex in ``B^{[n]}`` is a chain ``y`` together with, for
each cell ``u·ε^j`` of ``W₋`` (sent to ``![j] -> [0]`` in ``Δ_t``), a natural
map ``β_j : t^j y -> y``. Every top-preserving ``γ : [p] -> [q]`` splits as
``γ = α ⊕ ![j]`` with ``α = γ`` restricted below the first vertex sent to ``q``,
and the cone sends ``γ`` to ``T(α)_y ∘ t^{p0} β_j``. Functoriality of this
assignment on ``Δ_t`` truncated at ``[K]`` is the cone condition. A
``W₊``-cone is just the chain ``y``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from ..bridge import squiggle_to_ss
from ..errors import NotStabilized
from ..operators import SimplicialOperator, operators
from .algebras import EilenbergMoore, Resolution, eilenberg_moore
from .categories import FinCategory, FinMonad
from .weights import build_weight

Chain = tuple[tuple[str, ...], tuple[str, ...]]


@dataclass(frozen=True)
class Cone:
    chain: Chain
    betas: tuple[tuple[str, ...], ...] = ()  # betas[j-1][i] = (β_j)_i

    def to_dict(self) -> dict:
        return {"objects": list(self.chain[0]), "morphisms": list(self.chain[1]),
                "betas": {str(j + 1): list(b) for j, b in enumerate(self.betas)}}


@dataclass
class ConeSet:
    weight: str
    n: int
    max_width: int
    truncation: int
    cones: list[Cone]
    stabilized: bool = True
    probe_count: int | None = None

    def require_stable(self) -> "ConeSet":
        if not self.stabilized:
            raise NotStabilized(
                f"{self.weight} cones at n={self.n} change between truncations "
                f"{self.truncation} and {self.truncation + 1}")
        return self

    def to_dict(self) -> dict:
        return {"weight": self.weight, "n": self.n, "maxWidth": self.max_width,
                "truncation": self.truncation, "stabilized": self.stabilized,
                "count": len(self.cones), "cones": [c.to_dict() for c in self.cones]}


def truncation_for(max_width: int) -> int:
    """Largest ``j`` with a cell ``u·ε^j`` of ``W₋`` within the width bound."""
    w = build_weight("Wminus", 1, max_width)
    js = [squiggle_to_ss(c).objects[0] for c in w.cells.get(1, ())]
    return max(js, default=0)


@lru_cache(maxsize=None)
def _top_ops(p: int, q: int) -> tuple[SimplicialOperator, ...]:
    return tuple(g for g in operators(p, q) if g.values[-1] == q)


@lru_cache(maxsize=None)
def _pairs_at(k: int) -> tuple[tuple[SimplicialOperator, SimplicialOperator, SimplicialOperator], ...]:
    """Composable top-preserving pairs among ``[0..k]`` that involve ``[k]``,
    with their composite."""
    out = []
    for p, q, r in product(range(k + 1), repeat=3):
        if k not in (p, q, r):
            continue
        for a in _top_ops(p, q):
            for g in _top_ops(q, r):
                out.append((a, g, _compose_ops(g, a)))
    return tuple(out)


def _compose_ops(g: SimplicialOperator, a: SimplicialOperator) -> SimplicialOperator:
    return SimplicialOperator(a.src, g.tgt, tuple(g.values[v] for v in a.values))


class _ConeData:
    def __init__(self, m: FinMonad, chain: Chain, betas: tuple[tuple[str, ...], ...]):
        self.m, self.chain, self.betas = m, chain, betas
        self.res = [Resolution(m, y) for y in chain[0]]
        self._memo: dict[tuple[SimplicialOperator, int], str] = {}

    def component(self, gamma: SimplicialOperator, i: int) -> str:
        hit = self._memo.get((gamma, i))
        if hit is None:
            hit = self._memo[gamma, i] = self._component(gamma, i)
        return hit

    def _component(self, gamma: SimplicialOperator, i: int) -> str:
        B, m = self.m.base, self.m
        q = gamma.tgt
        p0 = gamma.values.index(q)
        alpha = SimplicialOperator(p0 - 1, q - 1, gamma.values[:p0])
        j = gamma.src - p0
        y = self.chain[0][i]
        beta = B.id(m.tob(j, y)) if j == 0 else self.betas[j - 1][i]
        return B.compose(self.res[i].map(alpha), m.tmor(p0, beta))

    def functorial_at(self, k: int) -> bool:
        B = self.m.base
        for a, g, ga in _pairs_at(k):
            for i in range(len(self.chain[0])):
                if self.component(ga, i) != B.compose(self.component(g, i), self.component(a, i)):
                    return False
        return True


def natural_maps(m: FinMonad, chain: Chain, j: int) -> list[tuple[str, ...]]:
    """Natural transformations ``t^j y -> y`` for a chain ``y``."""
    B = m.base
    objs, mors = chain
    comps = [B.hom(m.tob(j, y), y) for y in objs]
    out = []
    for choice in product(*comps):
        if all(B.compose(g, choice[i]) == B.compose(choice[i + 1], m.tmor(j, g)) for i, g in enumerate(mors)):
            out.append(tuple(choice))
    return out


def _solve(m: FinMonad, n: int, k: int) -> list[Cone]:
    out = []
    for chain in m.base.nerve(n):
        partial: list[tuple[tuple[str, ...], ...]] = [()]
        for j in range(1, k + 1):
            cands = natural_maps(m, chain, j)
            partial = [bs + (b,) for bs in partial for b in cands
                       if _ConeData(m, chain, bs + (b,)).functorial_at(j)]
        out.extend(Cone(chain, bs) for bs in partial)
    return out


def cone_solver(weight: str, m: FinMonad, n: int, max_width: int = 7, probe: bool = True) -> ConeSet:
    """All weighted cones with vertex in ``B^{[n]}`` for ``weight`` in ``{'Wplus','Wminus'}``.

    The truncation ``K`` is read off the cells of ``W₋`` within
    ``max_width``. With ``probe`` the search is repeated at ``K+1`` and the
    set is marked unstable unless the projection is a bijection.
    """
    if weight == "Wplus":
        cones = [Cone(c) for c in m.base.nerve(n)]
        return ConeSet(weight, n, max_width, 0, cones)
    if weight != "Wminus":
        raise ValueError(f"unknown weight {weight!r}")
    k = truncation_for(max_width)
    cones = _solve(m, n, k)
    cs = ConeSet(weight, n, max_width, k, cones)
    if probe:
        bigger = _solve(m, n, k + 1)
        proj = [Cone(c.chain, c.betas[:k]) for c in bigger]
        cs.probe_count = len(bigger)
        cs.stabilized = len(set(proj)) == len(proj) and set(proj) == set(cones)
    return cs


def _nerve_face(C: FinCategory, simplex: Chain, i: int) -> Chain:
    objs, mors = simplex
    n = len(objs) - 1
    new_objs = objs[:i] + objs[i + 1:]
    if i == 0:
        new_mors = mors[1:]
    elif i == n:
        new_mors = mors[:-1]
    else:
        new_mors = mors[: i - 1] + (C.compose(mors[i], mors[i - 1]),) + mors[i + 1:]
    return new_objs, new_mors


def _nerve_degeneracy(C: FinCategory, simplex: Chain, i: int) -> Chain:
    objs, mors = simplex
    return objs[: i + 1] + objs[i:], mors[:i] + (C.id(objs[i]),) + mors[i:]


def _cone_face(m: FinMonad, c: Cone, i: int) -> Cone:
    return Cone(_nerve_face(m.base, c.chain, i), tuple(b[:i] + b[i + 1:] for b in c.betas))


def _cone_degeneracy(m: FinMonad, c: Cone, i: int) -> Cone:
    return Cone(_nerve_degeneracy(m.base, c.chain, i), tuple(b[: i + 1] + b[i:] for b in c.betas))


@dataclass
class CompareReport:
    max_width: int
    truncation: int
    counts: dict[int, tuple[int, int]] = field(default_factory=dict)  # n -> (cones, EM simplices)
    failures: list[str] = field(default_factory=list)
    stabilized: bool = True

    @property
    def ok(self) -> bool:
        return not self.failures and self.stabilized

    def to_dict(self) -> dict:
        return {"ok": self.ok, "maxWidth": self.max_width, "truncation": self.truncation,
                "stabilized": self.stabilized,
                "counts": {str(n): {"cones": a, "emSimplices": b} for n, (a, b) in self.counts.items()},
                "failures": self.failures}


def compare_em(m: FinMonad, max_width: int = 7, max_n: int = 2, em: EilenbergMoore | None = None) -> CompareReport:
    """Match ``W₋``-cones with simplices of the nerve of ``B[t]``.

    A cone ``(y, β)`` goes to the chain of algebras ``(y_i, (β_1)_i)``. The
    report checks this is a bijection in each degree up to ``max_n``, that
    restricting along ``W₊ ↪ W₋`` agrees with ``u^t``, and that the matching
    commutes with faces and degeneracies.
    """
    em = em or eilenberg_moore(m)
    EM = em.category
    rep = CompareReport(max_width, truncation_for(max_width))
    images: dict[int, dict[Cone, Chain]] = {}
    for n in range(max_n + 1):
        cs = cone_solver("Wminus", m, n, max_width)
        rep.stabilized &= cs.stabilized
        plus = {c.chain for c in cone_solver("Wplus", m, n, max_width).cones}
        nerve = EM.nerve(n)
        rep.counts[n] = (len(cs.cones), len(nerve))
        img: dict[Cone, Chain] = {}
        for c in cs.cones:
            objs, mors = c.chain
            if not c.betas:
                rep.failures.append(f"truncation too small to read an algebra at n={n}")
                break
            algs = tuple(f"({y},{b})" for y, b in zip(objs, c.betas[0]))
            if any(a not in em.algebras for a in algs):
                rep.failures.append(f"cone {c.to_dict()} does not give algebras")
                continue
            ms = tuple(em.lookup.get((g, algs[i], algs[i + 1])) for i, g in enumerate(mors))
            if None in ms:
                rep.failures.append(f"cone {c.to_dict()} does not give algebra maps")
                continue
            img[c] = (algs, ms)
            under = (tuple(em.ut.ob(a) for a in algs), tuple(em.ut.mor(h) for h in ms))
            if under != c.chain or c.chain not in plus:
                rep.failures.append(f"u^t disagrees with restriction to W₊ at {c.to_dict()}")
        if len(set(img.values())) != len(img) or set(img.values()) != set(nerve):
            rep.failures.append(f"cones and EM simplices do not match at n={n}")
        images[n] = img
    for n in range(1, max_n + 1):
        for c, s in images[n].items():
            for i in range(n + 1):
                fc = _cone_face(m, c, i)
                if images[n - 1].get(fc) != _nerve_face(EM, s, i):
                    rep.failures.append(f"face {i} is not respected at n={n}")
    for n in range(max_n):
        for c, s in images[n].items():
            for i in range(n + 1):
                dc = _cone_degeneracy(m, c, i)
                if images[n + 1].get(dc) != _nerve_degeneracy(EM, s, i):
                    rep.failures.append(f"degeneracy {i} is not respected at n={n}")
    return rep
