"""Ordinal-sum presentation of the hom-categories and its comparison with squiggles.

The four hom-categories are ``Δ₊`` for ``(+,+)``, ``Δ₊ᵒᵖ`` for ``(-,-)``,
top-preserving maps ``Δ_t`` for ``(-,+)`` and bottom-preserving maps ``Δ_b``
for ``(+,-)``; a pair ``(src, tgt)`` names domain then codomain. A morphism
``x0 -> x1`` of a hom-category is stored as a plain operator, pointing
``[x0] -> [x1]`` except in ``Δ₊ᵒᵖ`` where it points ``[x1] -> [x0]``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator

from .computad import _hom_dim, normal_form, segal_splice
from .errors import NotComposable, NotFoundWithinBound, NotInSubcategory
from .operators import SimplicialOperator, act, compose, crossing_count, from_interval, identity, operators, simplex
from .squiggle import MINUS, PLUS, Squiggle, make

PlusOperator = SimplicialOperator

PLUS_PLUS = (PLUS, PLUS)
MINUS_MINUS = (MINUS, MINUS)
MINUS_PLUS = (MINUS, PLUS)  # Δ_t, contains u
PLUS_MINUS = (PLUS, MINUS)  # Δ_b, contains f
PAIRS = (PLUS_PLUS, MINUS_MINUS, MINUS_PLUS, PLUS_MINUS)


def ordinal_sum(a: PlusOperator, b: PlusOperator) -> PlusOperator:
    shift = a.tgt + 1
    return SimplicialOperator(a.src + b.src + 1, a.tgt + b.tgt + 1,
                              a.values + tuple(v + shift for v in b.values))


def adjoint_transpose(side: str, a: PlusOperator) -> PlusOperator:
    """The left (``side='left'``) or right adjoint of a monotone map."""
    if side == "left":
        if not a.top_preserving:
            raise NotInSubcategory(f"{a} does not preserve the top")
        return SimplicialOperator(a.tgt, a.src, tuple(
            min(i for i in range(a.src + 1) if a.values[i] >= j) for j in range(a.tgt + 1)))
    if side == "right":
        if not a.bottom_preserving:
            raise NotInSubcategory(f"{a} does not preserve the bottom")
        return SimplicialOperator(a.tgt, a.src, tuple(
            max(i for i in range(a.src + 1) if a.values[i] <= j) for j in range(a.tgt + 1)))
    raise ValueError(f"side must be 'left' or 'right', not {side!r}")


def bar_sum(a: PlusOperator, b: PlusOperator) -> PlusOperator:
    """``a ⊕̄ b``: the ordinal sum of a bottom- and a top-preserving map, read
    back through the interval representation."""
    return from_interval(ordinal_sum(a, b))


# -- hom-categories --------------------------------------------------------------

def is_endo(pair: tuple[str, str]) -> bool:
    return pair[0] == pair[1]


def min_object(pair: tuple[str, str]) -> int:
    return -1 if is_endo(pair) else 0


def in_hom(pair: tuple[str, str], m: PlusOperator) -> bool:
    if pair == MINUS_PLUS:
        return m.top_preserving
    if pair == PLUS_MINUS:
        return m.bottom_preserving
    return True


def hom_arrow(pair: tuple[str, str], x0: int, x1: int) -> Iterator[PlusOperator]:
    """Morphisms ``x0 -> x1`` of the hom-category, as stored operators."""
    if x0 < min_object(pair) or x1 < min_object(pair):
        return
    src, tgt = (x1, x0) if pair == MINUS_MINUS else (x0, x1)
    for m in operators(src, tgt):
        if in_hom(pair, m):
            yield m


def ends(pair: tuple[str, str], m: PlusOperator) -> tuple[int, int]:
    return (m.tgt, m.src) if pair == MINUS_MINUS else (m.src, m.tgt)


def vcompose(pair: tuple[str, str], g: PlusOperator, f: PlusOperator) -> PlusOperator:
    """``g ∘ f`` in the hom-category."""
    return compose(f, g) if pair == MINUS_MINUS else compose(g, f)


@dataclass(frozen=True)
class SSArrow:
    """An ``n``-simplex of the nerve of a hom-category."""

    pair: tuple[str, str]
    objects: tuple[int, ...]
    morphisms: tuple[PlusOperator, ...]

    def __post_init__(self) -> None:
        if len(self.objects) != len(self.morphisms) + 1:
            raise ValueError("need one more object than morphisms")
        for o in self.objects:
            if o < min_object(self.pair):
                raise NotInSubcategory(f"[{o}] is not an object of hom{self.pair}")
        for i, m in enumerate(self.morphisms):
            if not in_hom(self.pair, m):
                raise NotInSubcategory(f"{m} is not in hom{self.pair}")
            if ends(self.pair, m) != (self.objects[i], self.objects[i + 1]):
                raise NotComposable(f"morphism {i} does not join the chain")

    @property
    def dim(self) -> int:
        return len(self.morphisms)

    def between(self, p: int, q: int) -> PlusOperator:
        out = identity(self.objects[p])
        for m in self.morphisms[p:q]:
            out = vcompose(self.pair, m, out)
        return out

    def to_dict(self) -> dict:
        return {
            "pair": list(self.pair),
            "objects": list(self.objects),
            "morphisms": [str(m) for m in self.morphisms],
        }

    def __str__(self) -> str:
        body = " ; ".join(str(m) for m in self.morphisms) or f"[{self.objects[0]}]"
        return f"hom({self.pair[0]},{self.pair[1]}) {body}"


def ss_act(x: SSArrow, a: SimplicialOperator) -> SSArrow:
    """The nerve's simplicial action."""
    v = a.values
    return SSArrow(x.pair, tuple(x.objects[i] for i in v),
                   tuple(x.between(v[i - 1], v[i]) for i in range(1, len(v))))


def _hmor(px: tuple[str, str], py: tuple[str, str], mx: PlusOperator, my: PlusOperator) -> PlusOperator:
    if (px, py) in ((PLUS_PLUS, PLUS_PLUS), (MINUS_MINUS, MINUS_MINUS),
                    (PLUS_PLUS, MINUS_PLUS), (PLUS_MINUS, PLUS_PLUS)):
        return ordinal_sum(mx, my)
    if (px, py) == (MINUS_PLUS, MINUS_MINUS):
        return adjoint_transpose("right", ordinal_sum(adjoint_transpose("left", mx), my))
    if (px, py) == (MINUS_MINUS, PLUS_MINUS):
        return adjoint_transpose("left", ordinal_sum(mx, adjoint_transpose("right", my)))
    if (px, py) == (PLUS_MINUS, MINUS_PLUS):
        return bar_sum(mx, my)
    if (px, py) == (MINUS_PLUS, PLUS_MINUS):
        return bar_sum(adjoint_transpose("left", mx), adjoint_transpose("right", my))
    raise NotComposable(f"hom{px} cannot follow hom{py}")


def ss_compose(x: SSArrow, y: SSArrow) -> SSArrow:
    """Horizontal composite ``x ∘ y`` (``y`` first)."""
    if x.pair[0] != y.pair[1]:
        raise NotComposable(f"hom{x.pair} cannot follow hom{y.pair}")
    if x.dim != y.dim:
        raise NotComposable("dimensions differ")
    pair = (y.pair[0], x.pair[1])
    drop = 0 if is_endo(x.pair) or is_endo(y.pair) else 1
    objects = tuple(p + q + 1 - drop for p, q in zip(x.objects, y.objects))
    morphisms = tuple(_hmor(x.pair, y.pair, a, b) for a, b in zip(x.morphisms, y.morphisms))
    return SSArrow(pair, objects, morphisms)


# -- comparison with squiggles -------------------------------------------------------

def pair_of(a: Squiggle) -> tuple[str, str]:
    return (a.dom, a.cod)


def object_of(pair: tuple[str, str], crossings: int) -> int:
    """The ordinal attached to a 0-arrow crossing its line ``crossings`` times."""
    return crossings // 2 - (1 if is_endo(pair) else 0)


def crossings_of(pair: tuple[str, str], ordinal: int) -> int:
    return 2 * (ordinal + 1) if is_endo(pair) else 2 * ordinal + 1


def _generator_image(b: Squiggle) -> SSArrow:
    """Image of a nondegenerate atom of dimension at most one, as a 1-simplex."""
    w = b.word
    if b.dim == 0:
        pair = (PLUS, MINUS) if w == (0, 1) else (MINUS, PLUS)
        return SSArrow(pair, (0, 0), (identity(0),))
    d0 = SimplicialOperator(-1, 0, ())
    if w == (2, 1, 2):
        return SSArrow(PLUS_PLUS, (-1, 0), (d0,))
    if w == (0, 1, 0):
        return SSArrow(MINUS_MINUS, (0, -1), (d0,))
    raise ValueError(f"{b} is not a generator of dimension at most one")


def _edge_image(e: Squiggle) -> SSArrow:
    if e.is_identity():
        s = e.dom
        return SSArrow((s, s), (-1, -1), (identity(-1),))
    parts = [_generator_image(b) for b, _ in normal_form(e).factors]
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = ss_compose(p, out)
    return out


@lru_cache(maxsize=None)
def squiggle_to_ss(a: Squiggle) -> SSArrow:
    pair = pair_of(a)
    objects = tuple(object_of(pair, crossing_count(a, j)) for j in range(a.dim + 1))
    morphisms = tuple(
        _edge_image(act(a, simplex(j - 1, j, n=a.dim))).morphisms[0] for j in range(1, a.dim + 1)
    )
    return SSArrow(pair, objects, morphisms)


@lru_cache(maxsize=None)
def _one_arrows(pair: tuple[str, str], bound: int) -> dict[PlusOperator, Squiggle]:
    table = {}
    for e in _hom_dim(pair[0], pair[1], 1, bound):
        table[squiggle_to_ss(e).morphisms[0]] = e
    return table


def zero_arrow(pair: tuple[str, str], ordinal: int) -> Squiggle:
    c = crossings_of(pair, ordinal)
    first = 0 if pair[1] == MINUS else 1
    return make(0, tuple((first + i) % 2 for i in range(c + 1)))


def ss_to_squiggle(x: SSArrow, width_bound: int) -> Squiggle:
    """The squiggle with image ``x``, searched among widths up to ``width_bound``."""
    pair = x.pair
    if x.dim == 0:
        a = zero_arrow(pair, x.objects[0])
    else:
        table = _one_arrows(pair, width_bound)
        edges = []
        for m in x.morphisms:
            if m not in table:
                raise NotFoundWithinBound(f"no 1-arrow of width <= {width_bound} maps to {m}")
            edges.append(table[m])
        a = edges[0]
        for e in edges[1:]:
            a = segal_splice(a, e)
    if a.width > width_bound:
        raise NotFoundWithinBound(f"the preimage {a} is wider than {width_bound}")
    if squiggle_to_ss(a) != x:
        raise NotFoundWithinBound(f"reconstruction {a} does not map back to {x}")
    return a


def nerve_simplices(pair: tuple[str, str], dim: int, max_object: int) -> Iterator[SSArrow]:
    lo = min_object(pair)
    for objs in product(range(lo, max_object + 1), repeat=dim + 1):
        choices = [list(hom_arrow(pair, objs[i], objs[i + 1])) for i in range(dim)]
        for ms in product(*choices):
            yield SSArrow(pair, objs, ms)


def crossing_weight(x: SSArrow) -> int:
    """Sum over vertices of their crossing counts; bounds the preimage width."""
    return sum(crossings_of(x.pair, o) for o in x.objects)


# -- the coequalizer of Δ_b × Δ₊ × Δ_t ⇉ Δ_b × Δ_t ----------------------------------

def split_sum(m: PlusOperator, p: int, q: int) -> tuple[PlusOperator, PlusOperator] | None:
    """Write ``m = a ⊕ b`` with ``a : [p] -> [q]``, if possible."""
    if p > m.src or q > m.tgt:
        return None
    head, tail = m.values[: p + 1], m.values[p + 1 :]
    if any(v > q for v in head) or any(v <= q for v in tail):
        return None
    return (SimplicialOperator(p, q, head),
            SimplicialOperator(m.src - p - 1, m.tgt - q - 1, tuple(v - q - 1 for v in tail)))


def _moves(x: SSArrow) -> Iterator[tuple[SSArrow, tuple[int, ...], tuple[PlusOperator, ...]]]:
    """Every nontrivial splitting ``x = x2 ⊕ z`` of a simplex of ``N(Δ_b)``.

    Yields ``x2`` with the objects and morphisms of ``z`` in ``N(Δ₊)``.
    """
    for objs in product(*(range(o + 1) for o in x.objects)):
        if objs == x.objects:
            continue
        x2ms, zms = [], []
        for i, mx in enumerate(x.morphisms):
            s = split_sum(mx, objs[i], objs[i + 1])
            if s is None:
                break
            x2ms.append(s[0])
            zms.append(s[1])
        else:
            zobjs = tuple(o - p - 1 for o, p in zip(x.objects, objs))
            yield SSArrow(PLUS_MINUS, objs, tuple(x2ms)), zobjs, tuple(zms)


@dataclass
class CoequalizerReport:
    k: int
    size_bound: int
    pairs: int = 0
    classes: int = 0
    images: int = 0
    well_defined: bool = True
    split_fibres: list[str] = field(default_factory=list)
    missed_targets: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.well_defined and not self.split_fibres and not self.missed_targets

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "sizeBound": self.size_bound,
            "pairs": self.pairs,
            "classes": self.classes,
            "images": self.images,
            "ok": self.ok,
            "splitFibres": self.split_fibres,
            "missedTargets": self.missed_targets,
        }


def coequalizer_check(k: int, size_bound: int) -> CoequalizerReport:
    """Identify ``(x ⊕ z, y) ~ (x, z ⊕ y)`` on bounded pairs of ``k``-simplices of
    ``N(Δ_b) × N(Δ_t)`` and compare the classes with their juxtapositions in
    ``N(Δᵒᵖ)``.

    Classes are the connected components under single moves. A move that
    changes the image breaks well-definedness; the map is injective on
    classes exactly when every fibre is a single component.
    """
    rep = CoequalizerReport(k, size_bound)
    xs = list(nerve_simplices(PLUS_MINUS, k, size_bound))
    ys = list(nerve_simplices(MINUS_PLUS, k, size_bound))
    x_id = {x: i for i, x in enumerate(xs)}
    y_id = {(y.objects, y.morphisms): j for j, y in enumerate(ys)}
    ny = len(ys)

    # images in N(Δᵒᵖ), one integer code per pair
    codes: dict[tuple, int] = {}
    edge_img: dict[tuple[PlusOperator, PlusOperator], PlusOperator] = {}
    keys = [0] * (len(xs) * ny)
    for i, x in enumerate(xs):
        for j, y in enumerate(ys):
            if k == 0:
                key: tuple = (x.objects[0] + y.objects[0],)
            else:
                parts = []
                for mx, my in zip(x.morphisms, y.morphisms):
                    img = edge_img.get((mx, my))
                    if img is None:
                        img = edge_img[mx, my] = bar_sum(mx, my)
                    parts.append(img)
                key = tuple(parts)
            keys[i * ny + j] = codes.setdefault(key, len(codes))
    parent = list(range(len(keys)))

    def find(u: int) -> int:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    # (x2 ⊕ z, y) ~ (x2, z ⊕ y); the y-side only depends on z
    shift: dict[tuple, list[tuple[int, int]]] = {}
    for i, x in enumerate(xs):
        for x2, zobjs, zms in _moves(x):
            table = shift.get((zobjs, zms))
            if table is None:
                table = shift[zobjs, zms] = []
                for j, y in enumerate(ys):
                    objs = tuple(z + o + 1 for z, o in zip(zobjs, y.objects))
                    if max(objs) > size_bound:
                        continue
                    j2 = y_id.get((objs, tuple(ordinal_sum(z, m) for z, m in zip(zms, y.morphisms))))
                    if j2 is not None:
                        table.append((j, j2))
            base, base2 = i * ny, x_id[x2] * ny
            for j, j2 in table:
                a, b = base + j, base2 + j2
                if keys[a] != keys[b]:
                    rep.well_defined = False
                    rep.split_fibres.append(f"{x} , {ys[j]} and {x2} , {ys[j2]} have different images")
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
    fibres: dict[int, set[int]] = defaultdict(set)
    for n, key in enumerate(keys):
        fibres[key].add(find(n))
    rep.pairs = len(keys)
    rep.images = len(fibres)
    names = {c: key for key, c in codes.items()}
    for key, comps in fibres.items():
        rep.classes += len(comps)
        if len(comps) != 1:
            rep.split_fibres.append(f"{names[key]}: {len(comps)} classes")
    # every target with ordinals <= size_bound has a bounded preimage
    for t in nerve_simplices(MINUS_MINUS, k, size_bound):
        if min(t.objects) < 0:
            continue
        key = (t.objects[0],) if k == 0 else t.morphisms
        if key not in codes:
            rep.missed_targets.append(str(t))
    return rep


def juxtapose(x: SSArrow, y: SSArrow) -> SSArrow:
    return ss_compose(x, y)
