"""Monad resolutions, Eilenberg-Moore categories and the canonical resolution
of an algebra, all over finite categories."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import NotAnAlgebra
from ..operators import SimplicialOperator, generator_word, operators
from .categories import FinAdjunction, FinCategory, FinFunctor, FinMonad, LawReport, check_functor


class Resolution:
    """The Δ₊-object ``[n] ↦ t^{n+1} b`` of a monad at an object ``b``."""

    def __init__(self, m: FinMonad, b: str):
        self.m, self.b = m, b
        self._cache: dict[SimplicialOperator, str] = {}

    def ob(self, n: int) -> str:
        return self.m.tob(n + 1, self.b)

    def elementary(self, g: SimplicialOperator) -> str:
        m = self.m
        if g.tgt == g.src + 1:  # face: [n-1] -> [n]
            n = g.tgt
            i = next(v for v in range(n + 1) if v not in g.values)
            return m.tmor(i, m.eta[m.tob(n - i, self.b)])
        n = g.tgt  # degeneracy: [n+1] -> [n]
        i = next(v for v in range(n + 1) if g.values.count(v) == 2)
        return m.tmor(i, m.mu[m.tob(n - i, self.b)])

    def map(self, alpha: SimplicialOperator) -> str:
        hit = self._cache.get(alpha)
        if hit is None:
            B = self.m.base
            hit = B.id(self.ob(alpha.src))
            for g in generator_word(alpha):
                hit = B.compose(self.elementary(g), hit)
            self._cache[alpha] = hit
        return hit


def monad_resolution(m: FinMonad, b: str) -> Resolution:
    return Resolution(m, b)


def check_resolution(res: Resolution, max_dim: int) -> LawReport:
    """Functoriality of the resolution on ``Δ₊`` restricted to ``[-1..max_dim]``."""
    rep = LawReport()
    B = res.m.base
    rng = range(-1, max_dim + 1)
    ops = {(p, q): list(operators(p, q)) for p in rng for q in rng}
    for p in rng:
        if res.map(SimplicialOperator(p, p, tuple(range(p + 1)))) != B.id(res.ob(p)):
            rep.fail(f"identity of [{p}] is not sent to an identity")
        for q in rng:
            for a in ops[p, q]:
                if B.morphisms[res.map(a)] != (res.ob(p), res.ob(q)):
                    rep.fail(f"{a} lands in the wrong hom")
                    continue
                for r in rng:
                    for g in ops[q, r]:
                        ga = SimplicialOperator(p, r, tuple(g.values[v] for v in a.values))
                        if res.map(ga) != B.compose(res.map(g), res.map(a)):
                            rep.fail(f"resolution does not preserve {g}∘{a}")
    return rep


def _alg_name(b: str, beta: str) -> str:
    return f"({b},{beta})"


@dataclass
class EilenbergMoore:
    monad: FinMonad
    category: FinCategory
    algebras: dict[str, tuple[str, str]]  # name -> (carrier, structure)
    lookup: dict[tuple[str, str, str], str]  # (h, A, A') -> morphism name
    ut: FinFunctor
    ft: FinFunctor
    adjunction: FinAdjunction

    def algebra(self, b: str, beta: str) -> str:
        name = _alg_name(b, beta)
        if name not in self.algebras:
            raise NotAnAlgebra(f"{beta} is not an algebra structure on {b}")
        return name

    def morphism(self, h: str, src: str, tgt: str) -> str:
        try:
            return self.lookup[h, src, tgt]
        except KeyError:
            raise NotAnAlgebra(f"{h} is not an algebra map {src} -> {tgt}") from None


def algebra_structures(m: FinMonad) -> list[tuple[str, str]]:
    B, t = m.base, m.t
    out = []
    for b in B.objects:
        for beta in B.hom(t.ob(b), b):
            if B.compose(beta, m.eta[b]) != B.id(b):
                continue
            if B.compose(beta, t.mor(beta)) != B.compose(beta, m.mu[b]):
                continue
            out.append((b, beta))
    return out


def is_algebra_map(m: FinMonad, h: str, src: tuple[str, str], tgt: tuple[str, str]) -> bool:
    B = m.base
    return B.compose(h, src[1]) == B.compose(tgt[1], m.t.mor(h))


def eilenberg_moore(m: FinMonad) -> EilenbergMoore:
    """``B[t]`` with its free/forgetful adjunction ``f^t ⊣ u^t``."""
    B, t = m.base, m.t
    algs = {_alg_name(b, beta): (b, beta) for b, beta in algebra_structures(m)}
    morphisms, lookup, underlying = {}, {}, {}
    for an, a in algs.items():
        for cn, c in algs.items():
            for h in B.hom(a[0], c[0]):
                if is_algebra_map(m, h, a, c):
                    name = f"{h}:{an}->{cn}"
                    morphisms[name] = (an, cn)
                    lookup[h, an, cn] = name
                    underlying[name] = h
    table = {}
    for g, (b, c) in morphisms.items():
        for f, (a, b2) in morphisms.items():
            if b2 == b:
                table[g, f] = lookup[B.compose(underlying[g], underlying[f]), a, c]
    ids = {an: lookup[B.id(a[0]), an, an] for an, a in algs.items()}
    C = FinCategory(list(algs), morphisms, table, ids)
    ut = FinFunctor(C, B, {an: a[0] for an, a in algs.items()}, underlying)
    free = {b: _alg_name(t.ob(b), m.mu[b]) for b in B.objects}
    for b, name in free.items():
        if name not in algs:
            raise NotAnAlgebra(f"the free algebra on {b} fails the algebra laws")
    ft = FinFunctor(B, C, free, {h: lookup[t.mor(h), free[a], free[c]] for h, (a, c) in B.morphisms.items()})
    eps = {an: lookup[a[1], free[a[0]], an] for an, a in algs.items()}
    adj = FinAdjunction(C, B, ft, ut, dict(m.eta), eps)
    return EilenbergMoore(m, C, algs, lookup, ut, ft, adj)


def conservativity_check(F: FinFunctor) -> tuple[bool, list[str]]:
    """Morphisms that are not invertible but become invertible under ``F``."""
    bad = [m for m in F.src.morphisms if F.tgt.is_iso(F.mor(m)) and not F.src.is_iso(m)]
    return not bad, bad


@dataclass
class CanonicalResolutionReport:
    algebra: str
    max_dim: int
    objects: list[str] = field(default_factory=list)
    faces: dict[str, str] = field(default_factory=dict)
    degeneracies: dict[str, str] = field(default_factory=dict)
    extra: dict[str, str] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"algebra": self.algebra, "maxDim": self.max_dim, "ok": self.ok,
                "objects": self.objects, "faces": self.faces,
                "degeneracies": self.degeneracies, "extraDegeneracies": self.extra,
                "failures": self.failures}


class CanonicalResolution:
    """The augmented simplicial object ``X_n = t^{n+1} b`` resolving ``(b, β)``."""

    def __init__(self, m: FinMonad, b: str, beta: str):
        self.m, self.b, self.beta = m, b, beta

    def ob(self, n: int) -> str:
        return self.m.tob(n + 1, self.b)

    def d(self, i: int, n: int) -> str:
        """``d_i : X_n -> X_{n-1}``."""
        m = self.m
        if i < n:
            return m.tmor(i, m.mu[m.tob(n - 1 - i, self.b)])
        return m.tmor(n, self.beta)

    def s(self, i: int, n: int) -> str:
        """``s_i : X_n -> X_{n+1}``; ``i = -1`` is the extra degeneracy."""
        m = self.m
        if i == -1:
            return m.eta[self.ob(n)]
        return m.tmor(i + 1, m.eta[m.tob(n - i, self.b)])


def canonical_resolution(m: FinMonad, b: str, beta: str, max_dim: int = 3,
                         em: EilenbergMoore | None = None) -> CanonicalResolutionReport:
    """Build and check the canonical resolution of the algebra ``(b, β)``.

    Checks the simplicial identities, the split (extra degeneracy)
    identities, that faces and degeneracies are maps of free algebras, and
    that ``β`` is the coequalizer of ``μ_b, tβ`` both in ``B[t]`` and in ``B``.
    """
    B = m.base
    em = em or eilenberg_moore(m)
    rep = CanonicalResolutionReport(_alg_name(b, beta), max_dim)
    em.algebra(b, beta)
    X = CanonicalResolution(m, b, beta)
    C = B.compose
    rep.objects = [X.ob(n) for n in range(-1, max_dim + 1)]

    def ends(x: str, src: str, tgt: str, label: str) -> None:
        if B.morphisms.get(x) != (src, tgt):
            rep.failures.append(f"{label} has the wrong ends")

    for n in range(0, max_dim + 1):
        for i in range(n + 1):
            rep.faces[f"d{i}^{n}"] = X.d(i, n)
            ends(X.d(i, n), X.ob(n), X.ob(n - 1), f"d{i}^{n}")
    for n in range(-1, max_dim):
        for i in range(-1, n + 1):
            key = f"s{i}^{n}"
            (rep.extra if i == -1 else rep.degeneracies)[key] = X.s(i, n)
            ends(X.s(i, n), X.ob(n), X.ob(n + 1), key)
    if rep.failures:
        return rep
    # simplicial identities
    for n in range(1, max_dim + 1):
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                if C(X.d(i, n - 1), X.d(j, n)) != C(X.d(j - 1, n - 1), X.d(i, n)):
                    rep.failures.append(f"d{i} d{j} = d{j-1} d{i} fails at {n}")
    for n in range(0, max_dim):
        for i in range(n + 1):
            for j in range(n + 2):
                lhs = C(X.d(j, n + 1), X.s(i, n))
                if j in (i, i + 1):
                    rhs = B.id(X.ob(n))
                elif j < i:
                    rhs = C(X.s(i - 1, n - 1), X.d(j, n)) if n > 0 else None
                else:
                    rhs = C(X.s(i, n - 1), X.d(j - 1, n)) if n > 0 else None
                if rhs is not None and lhs != rhs:
                    rep.failures.append(f"d{j} s{i} identity fails at {n}")
    for n in range(0, max_dim - 1):
        for i in range(n + 1):
            for j in range(i, n + 1):
                if C(X.s(j + 1, n + 1), X.s(i, n)) != C(X.s(i, n + 1), X.s(j, n)):
                    rep.failures.append(f"s{j+1} s{i} = s{i} s{j} fails at {n}")
    # split identities for the extra degeneracy s_{-1}
    for n in range(-1, max_dim):
        if C(X.d(0, n + 1), X.s(-1, n)) != B.id(X.ob(n)):
            rep.failures.append(f"d0 s-1 is not the identity at {n}")
        for i in range(1, n + 2):
            if C(X.d(i, n + 1), X.s(-1, n)) != C(X.s(-1, n - 1), X.d(i - 1, n)):
                rep.failures.append(f"d{i} s-1 = s-1 d{i-1} fails at {n}")
        for i in range(-1, n + 1):
            if C(X.s(i + 1, n + 1), X.s(-1, n)) != C(X.s(-1, n + 1), X.s(i, n)):
                rep.failures.append(f"s{i+1} s-1 = s-1 s{i} fails at {n}")
    # faces and degeneracies of the simplicial part are maps of free algebras
    free = lambda n: _alg_name(X.ob(n), m.mu[X.ob(n - 1)]) if n >= 0 else _alg_name(b, beta)  # noqa: E731
    for n in range(0, max_dim + 1):
        for i in range(n + 1):
            if (X.d(i, n), free(n), free(n - 1)) not in em.lookup:
                rep.failures.append(f"d{i}^{n} is not an algebra map")
    for n in range(0, max_dim):
        for i in range(n + 1):
            if (X.s(i, n), free(n), free(n + 1)) not in em.lookup:
                rep.failures.append(f"s{i}^{n} is not an algebra map")
    rep.failures += _coequalizer_failures(m, em, b, beta)
    return rep


def _coequalizer_failures(m: FinMonad, em: EilenbergMoore, b: str, beta: str) -> list[str]:
    """Brute-force universal property of ``β`` as coequalizer of ``μ_b, tβ``."""
    B, t = m.base, m.t
    out = []
    tb, ttb = t.ob(b), m.tob(2, b)
    mu, tbeta = m.mu[b], t.mor(beta)
    if B.morphisms[mu] != (ttb, tb) or B.morphisms[tbeta] != (ttb, tb):
        return ["μ_b and tβ are not parallel"]
    if B.compose(beta, mu) != B.compose(beta, tbeta):
        out.append("β does not coequalize μ_b and tβ")
    # in B
    for c in B.objects:
        for g in B.hom(tb, c):
            if B.compose(g, mu) != B.compose(g, tbeta):
                continue
            ks = [k for k in B.hom(b, c) if B.compose(k, beta) == g]
            if len(ks) != 1:
                out.append(f"in B: {len(ks)} factorisations of {g} through β")
    # in B[t]
    src = _alg_name(tb, mu)
    tgt = _alg_name(b, beta)
    for cn, cobj in em.algebras.items():
        for g in B.hom(tb, cobj[0]):
            if (g, src, cn) not in em.lookup or B.compose(g, mu) != B.compose(g, tbeta):
                continue
            ks = [k for k in B.hom(b, cobj[0]) if (k, tgt, cn) in em.lookup and B.compose(k, beta) == g]
            if len(ks) != 1:
                out.append(f"in B[t]: {len(ks)} factorisations of {g} through β into {cn}")
    return out


@dataclass
class ComparisonReport:
    obj_map: dict[str, str]
    mor_map: dict[str, str]
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {"ok": self.ok, "objMap": self.obj_map, "morMap": self.mor_map, "failures": self.failures}


def comparison_functor(adj: FinAdjunction, em: EilenbergMoore | None = None) -> ComparisonReport:
    """``R(a) = (ua, uε_a)`` from ``A`` to ``B[t]`` for the induced monad."""
    m = adj.monad()
    em = em or eilenberg_moore(m)
    u, B = adj.u, adj.B
    fails: list[str] = []
    obj_map, mor_map = {}, {}
    for a in adj.A.objects:
        name = _alg_name(u.ob(a), u.mor(adj.eps[a]))
        if name not in em.algebras:
            fails.append(f"R({a}) is not an algebra")
        obj_map[a] = name
    if fails:
        return ComparisonReport(obj_map, mor_map, fails)
    for h, (a, c) in adj.A.morphisms.items():
        key = (u.mor(h), obj_map[a], obj_map[c])
        if key not in em.lookup:
            fails.append(f"R({h}) is not an algebra map")
        else:
            mor_map[h] = em.lookup[key]
    if fails:
        return ComparisonReport(obj_map, mor_map, fails)
    R = FinFunctor(adj.A, em.category, obj_map, mor_map, check=False)
    fails += check_functor(R).failures
    if not R.then(em.ut).same_as(u):
        fails.append("u^t ∘ R differs from u")
    if not adj.f.then(R).same_as(em.ft):
        fails.append("R ∘ f differs from f^t")
    return ComparisonReport(obj_map, mor_map, fails)
