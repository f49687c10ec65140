"""Finite categories, functors, monads and adjunctions given by explicit tables."""
from __future__ import annotations

import json
from collections.abc import Sized
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Callable, Iterable, Mapping

from ..errors import InputNotFinite, LawViolation


def _finite(x: Any, what: str) -> None:
    if not isinstance(x, Sized):
        raise InputNotFinite(f"{what} must be a finite collection, got {type(x).__name__}")


@dataclass
class LawReport:
    ok: bool = True
    failures: list[str] = field(default_factory=list)

    def fail(self, msg: str) -> None:
        self.ok = False
        self.failures.append(msg)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "failures": self.failures}


class FinCategory:
    """A finite category: morphisms are names with a domain and codomain."""

    def __init__(
        self,
        objects: Iterable[str],
        morphisms: Mapping[str, tuple[str, str]],
        compose: Mapping[tuple[str, str], str],
        identities: Mapping[str, str],
        check: bool = True,
    ):
        for x, what in ((objects, "objects"), (morphisms, "morphisms"), (compose, "compose")):
            _finite(x, what)
        self.objects = tuple(objects)
        self.morphisms = dict(morphisms)
        self.table = dict(compose)
        self.identities = dict(identities)
        self._homs: dict[tuple[str, str], list[str]] = {}
        for name, (a, b) in self.morphisms.items():
            self._homs.setdefault((a, b), []).append(name)
        if check:
            rep = check_category(self)
            if not rep.ok:
                raise LawViolation("; ".join(rep.failures[:5]))

    def dom(self, m: str) -> str:
        return self.morphisms[m][0]

    def cod(self, m: str) -> str:
        return self.morphisms[m][1]

    def hom(self, a: str, b: str) -> list[str]:
        return self._homs.get((a, b), [])

    def compose(self, g: str, f: str) -> str:
        """``g ∘ f``."""
        return self.table[g, f]

    def chain(self, *ms: str) -> str:
        """Composite of ``ms`` read right to left, like ``∘``."""
        out = ms[-1]
        for g in reversed(ms[:-1]):
            out = self.compose(g, out)
        return out

    def id(self, a: str) -> str:
        return self.identities[a]

    def is_iso(self, m: str) -> bool:
        a, b = self.morphisms[m]
        return any(self.table[m, n] == self.identities[b] and self.table[n, m] == self.identities[a]
                   for n in self.hom(b, a))

    def nerve(self, n: int) -> list[tuple[tuple[str, ...], tuple[str, ...]]]:
        """``n``-simplices as (objects, morphisms) chains."""
        if n == 0:
            return [((a,), ()) for a in self.objects]
        out = []
        for objs, ms in self.nerve(n - 1):
            for m in self.morphisms:
                if self.dom(m) == objs[-1]:
                    out.append((objs + (self.cod(m),), ms + (m,)))
        return out

    def to_json(self) -> dict:
        homs: dict[str, list[str]] = {}
        for (a, b), ms in sorted(self._homs.items()):
            homs[f"{a}→{b}"] = sorted(ms)
        return {
            "objects": list(self.objects),
            "homs": homs,
            "compose": {f"{g}∘{f}": h for (g, f), h in sorted(self.table.items())},
            "identities": dict(sorted(self.identities.items())),
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "FinCategory":
        for key in ("objects", "homs", "compose", "identities"):
            if key not in data:
                raise ValueError(f"missing key {key!r}")
            _finite(data[key], key)
        morphisms = {}
        for key, names in data["homs"].items():
            a, b = _split_key(key, ("→", "->"))
            for m in names:
                morphisms[m] = (a, b)
        table = {}
        for key, h in data["compose"].items():
            g, f = _split_key(key, ("∘", "*"))
            table[g, f] = h
        return cls(data["objects"], morphisms, table, data["identities"])

    def __repr__(self) -> str:
        return f"FinCategory({len(self.objects)} objects, {len(self.morphisms)} morphisms)"


def _split_key(key: str, seps: tuple[str, ...]) -> tuple[str, str]:
    for sep in seps:
        if sep in key:
            a, b = key.split(sep, 1)
            return a.strip(), b.strip()
    raise ValueError(f"cannot split {key!r}")


def check_category(c: FinCategory) -> LawReport:
    rep = LawReport()
    for a in c.objects:
        i = c.identities.get(a)
        if i is None or c.morphisms.get(i) != (a, a):
            rep.fail(f"identity of {a} missing or misplaced")
    for m, (a, b) in c.morphisms.items():
        if a not in c.objects or b not in c.objects:
            rep.fail(f"{m} has an unknown end")
    if not rep.ok:
        return rep
    for g, f in product(c.morphisms, repeat=2):
        if c.dom(g) != c.cod(f):
            continue
        h = c.table.get((g, f))
        if h is None:
            rep.fail(f"{g}∘{f} undefined")
        elif c.morphisms.get(h) != (c.dom(f), c.cod(g)):
            rep.fail(f"{g}∘{f} = {h} has the wrong ends")
    if not rep.ok:
        return rep
    for m, (a, b) in c.morphisms.items():
        if c.table[m, c.identities[a]] != m or c.table[c.identities[b], m] != m:
            rep.fail(f"identity law fails at {m}")
    for h, g, f in product(c.morphisms, repeat=3):
        if c.dom(h) == c.cod(g) and c.dom(g) == c.cod(f):
            if c.table[h, c.table[g, f]] != c.table[c.table[h, g], f]:
                rep.fail(f"associativity fails at ({h}, {g}, {f})")
    return rep


def poset_category(elements: Iterable[str], leq: Callable[[str, str], bool]) -> FinCategory:
    """The category of a finite poset; the arrow ``a <= b`` is named ``a<=b``."""
    elements = list(elements)
    name = lambda a, b: f"{a}<={b}"  # noqa: E731
    morphisms = {name(a, b): (a, b) for a in elements for b in elements if leq(a, b)}
    table = {}
    for g, (b, c) in morphisms.items():
        for f, (a, b2) in morphisms.items():
            if b == b2:
                table[g, f] = name(a, c)
    return FinCategory(elements, morphisms, table, {a: name(a, a) for a in elements})


def chain_poset(n: int) -> FinCategory:
    """The ordinal ``{0 < 1 < ... < n-1}``."""
    return poset_category([str(i) for i in range(n)], lambda a, b: int(a) <= int(b))


class FinFunctor:
    def __init__(self, src: FinCategory, tgt: FinCategory,
                 obj_map: Mapping[str, str], mor_map: Mapping[str, str], check: bool = True):
        self.src, self.tgt = src, tgt
        self.obj_map, self.mor_map = dict(obj_map), dict(mor_map)
        if check:
            rep = check_functor(self)
            if not rep.ok:
                raise LawViolation("; ".join(rep.failures[:5]))

    def ob(self, a: str) -> str:
        return self.obj_map[a]

    def mor(self, m: str) -> str:
        return self.mor_map[m]

    def then(self, g: "FinFunctor") -> "FinFunctor":
        """``g ∘ self``."""
        return FinFunctor(self.src, g.tgt,
                          {a: g.ob(self.ob(a)) for a in self.src.objects},
                          {m: g.mor(self.mor(m)) for m in self.src.morphisms})

    def power(self, k: int) -> "FinFunctor":
        out = identity_functor(self.src)
        for _ in range(k):
            out = out.then(self)
        return out

    def to_json(self) -> dict:
        return {"objMap": dict(sorted(self.obj_map.items())),
                "morMap": dict(sorted(self.mor_map.items()))}

    def same_as(self, other: "FinFunctor") -> bool:
        return self.obj_map == other.obj_map and self.mor_map == other.mor_map


def identity_functor(c: FinCategory) -> FinFunctor:
    return FinFunctor(c, c, {a: a for a in c.objects}, {m: m for m in c.morphisms}, check=False)


def check_functor(F: FinFunctor) -> LawReport:
    rep = LawReport()
    for a in F.src.objects:
        if F.obj_map.get(a) not in F.tgt.objects:
            rep.fail(f"object {a} has no image")
    for m in F.src.morphisms:
        if m not in F.mor_map:
            rep.fail(f"morphism {m} has no image")
    if not rep.ok:
        return rep
    for m, (a, b) in F.src.morphisms.items():
        if F.tgt.morphisms.get(F.mor_map[m]) != (F.obj_map[a], F.obj_map[b]):
            rep.fail(f"F({m}) has the wrong ends")
    if not rep.ok:
        return rep
    for a in F.src.objects:
        if F.mor_map[F.src.id(a)] != F.tgt.id(F.obj_map[a]):
            rep.fail(f"F does not preserve the identity of {a}")
    for (g, f), h in F.src.table.items():
        if F.tgt.compose(F.mor_map[g], F.mor_map[f]) != F.mor_map[h]:
            rep.fail(f"F does not preserve {g}∘{f}")
    return rep


def check_natural(F: FinFunctor, G: FinFunctor, eta: Mapping[str, str], label: str) -> LawReport:
    rep = LawReport()
    C, D = F.src, F.tgt
    for a in C.objects:
        c = eta.get(a)
        if c is None or D.morphisms.get(c) != (F.ob(a), G.ob(a)):
            rep.fail(f"{label} component at {a} missing or misplaced")
    if not rep.ok:
        return rep
    for m, (a, b) in C.morphisms.items():
        if D.compose(eta[b], F.mor(m)) != D.compose(G.mor(m), eta[a]):
            rep.fail(f"{label} is not natural at {m}")
    return rep


class FinMonad:
    def __init__(self, base: FinCategory, t: FinFunctor,
                 eta: Mapping[str, str], mu: Mapping[str, str], check: bool = True):
        self.base, self.t = base, t
        self.eta, self.mu = dict(eta), dict(mu)
        if check:
            rep = check_monad(self)
            if not rep.ok:
                raise LawViolation("; ".join(rep.failures[:5]))

    def tob(self, k: int, a: str) -> str:
        for _ in range(k):
            a = self.t.ob(a)
        return a

    def tmor(self, k: int, m: str) -> str:
        for _ in range(k):
            m = self.t.mor(m)
        return m

    def to_json(self) -> dict:
        return {"category": self.base.to_json(), "t": self.t.to_json(),
                "eta": dict(sorted(self.eta.items())), "mu": dict(sorted(self.mu.items()))}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "FinMonad":
        base = FinCategory.from_json(data["category"])
        t = FinFunctor(base, base, data["t"]["objMap"], data["t"]["morMap"])
        return cls(base, t, data["eta"], data["mu"])


def check_monad(m: FinMonad) -> LawReport:
    B, t = m.base, m.t
    rep = check_functor(t)
    if not rep.ok:
        return rep
    tt = t.then(t)
    for r in (check_natural(identity_functor(B), t, m.eta, "eta"), check_natural(tt, t, m.mu, "mu")):
        rep.failures += r.failures
        rep.ok &= r.ok
    if not rep.ok:
        return rep
    for b in B.objects:
        tb = t.ob(b)
        idt = B.id(tb)
        if B.compose(m.mu[b], t.mor(m.eta[b])) != idt:
            rep.fail(f"mu∘t(eta) is not the identity at {b}")
        if B.compose(m.mu[b], m.eta[tb]) != idt:
            rep.fail(f"mu∘eta_t is not the identity at {b}")
        if B.compose(m.mu[b], t.mor(m.mu[b])) != B.compose(m.mu[b], m.mu[tb]):
            rep.fail(f"associativity fails at {b}: (mu, t(mu), mu_t)")
    return rep


def identity_monad(c: FinCategory) -> FinMonad:
    ids = {a: c.id(a) for a in c.objects}
    return FinMonad(c, identity_functor(c), ids, ids)


def poset_monad(c: FinCategory, tmap: Mapping[str, str]) -> FinMonad:
    """A closure operator on a poset category; unit and multiplication are forced."""
    name = lambda a, b: f"{a}<={b}"  # noqa: E731
    mor_map = {m: name(tmap[a], tmap[b]) for m, (a, b) in c.morphisms.items()}
    t = FinFunctor(c, c, tmap, mor_map)
    eta = {a: name(a, tmap[a]) for a in c.objects}
    mu = {a: name(tmap[tmap[a]], tmap[a]) for a in c.objects}
    return FinMonad(c, t, eta, mu)


class FinAdjunction:
    """``f ⊣ u`` with ``f: B -> A``, ``u: A -> B``, unit on ``B``, counit on ``A``."""

    def __init__(self, A: FinCategory, B: FinCategory, f: FinFunctor, u: FinFunctor,
                 eta: Mapping[str, str], eps: Mapping[str, str], check: bool = True):
        self.A, self.B, self.f, self.u = A, B, f, u
        self.eta, self.eps = dict(eta), dict(eps)
        if check:
            rep = check_adjunction(self)
            if not rep.ok:
                raise LawViolation("; ".join(rep.failures[:5]))

    def monad(self) -> FinMonad:
        t = self.f.then(self.u)
        mu = {b: self.u.mor(self.eps[self.f.ob(b)]) for b in self.B.objects}
        return FinMonad(self.B, t, self.eta, mu)


def check_adjunction(adj: FinAdjunction) -> LawReport:
    A, B, f, u = adj.A, adj.B, adj.f, adj.u
    rep = LawReport()
    for r in (check_functor(f), check_functor(u)):
        rep.failures += r.failures
        rep.ok &= r.ok
    if not rep.ok:
        return rep
    uf, fu = f.then(u), u.then(f)
    for r in (check_natural(identity_functor(B), uf, adj.eta, "eta"),
              check_natural(fu, identity_functor(A), adj.eps, "eps")):
        rep.failures += r.failures
        rep.ok &= r.ok
    if not rep.ok:
        return rep
    for a in A.objects:
        if B.compose(u.mor(adj.eps[a]), adj.eta[u.ob(a)]) != B.id(u.ob(a)):
            rep.fail(f"triangle u(eps)∘eta_u fails at {a}")
    for b in B.objects:
        if A.compose(adj.eps[f.ob(b)], f.mor(adj.eta[b])) != A.id(f.ob(b)):
            rep.fail(f"triangle eps_f∘f(eta) fails at {b}")
    return rep


def check_laws(data: FinCategory | FinFunctor | FinMonad | FinAdjunction) -> LawReport:
    if isinstance(data, FinMonad):
        return check_monad(data)
    if isinstance(data, FinAdjunction):
        return check_adjunction(data)
    if isinstance(data, FinFunctor):
        return check_functor(data)
    if isinstance(data, FinCategory):
        return check_category(data)
    raise TypeError(f"cannot check {type(data).__name__}")


def load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)
