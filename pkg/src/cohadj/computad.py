"""Computad structure: atomic factorisation, normal forms, subcomputads,
bounded hom enumeration, Segal splicing and homotopy categories."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .errors import IncompleteWitness, IsIdentity, TruncationTooSmall, VerticesDoNotMatch
from .operators import SimplicialOperator, act, degeneracy, face, from_interval, simplex, vertex
from .squiggle import MINUS, PLUS, Squiggle, compose_all, is_atomic, is_degenerate, make


def atomic_decompose(a: Squiggle) -> list[Squiggle]:
    """Split ``a`` at every interior sign; the pieces compose back to ``a``."""
    if a.is_identity():
        raise IsIdentity(f"{a} is an identity")
    top = a.dim + 1
    pieces, start = [], 0
    for i in range(1, len(a.word) - 1):
        if a.word[i] in (0, top):
            pieces.append(make(a.dim, a.word[start : i + 1]))
            start = i
    pieces.append(make(a.dim, a.word[start:]))
    return pieces


def nondegenerate_part(a: Squiggle) -> tuple[Squiggle, SimplicialOperator]:
    """Write ``a = b · σ`` with ``b`` nondegenerate and ``σ`` surjective."""
    levels = sorted({0, a.dim + 1} | {x for x in a.word if 0 < x <= a.dim})
    k = len(levels) - 2
    rank = {v: r for r, v in enumerate(levels)}
    b = make(k, tuple(rank[x] for x in a.word))
    sigma = from_interval(SimplicialOperator(k + 1, a.dim + 1, tuple(levels)))
    return b, sigma


@dataclass(frozen=True)
class NormalForm:
    """Composable factors ``(b_i, σ_i)``; the arrow is ``(b_1·σ_1) ∘ ... ∘ (b_r·σ_r)``."""

    factors: tuple[tuple[Squiggle, SimplicialOperator], ...]

    def recompose(self) -> Squiggle:
        return compose_all([act(b, s) for b, s in self.factors])

    def atoms(self) -> tuple[Squiggle, ...]:
        return tuple(b for b, _ in self.factors)


def normal_form(a: Squiggle) -> NormalForm:
    return NormalForm(tuple(nondegenerate_part(p) for p in atomic_decompose(a)))


def faces(a: Squiggle) -> list[Squiggle]:
    return [act(a, face(i, a.dim)) for i in range(a.dim + 1)] if a.dim > 0 else []


# -- enumeration ------------------------------------------------------------

def _sign(s: str, dim: int) -> int:
    if s not in (MINUS, PLUS):
        raise ValueError(f"expected '-' or '+', got {s!r}")
    return 0 if s == MINUS else dim + 1


def iter_words(dim: int, first: int, last: int | None, max_width: int) -> Iterator[tuple[int, ...]]:
    """Strictly undulating words starting at ``first`` and ending at a sign."""
    top = dim + 1
    rising0 = first == 0
    word = [first]

    def rec() -> Iterator[tuple[int, ...]]:
        x = word[-1]
        if len(word) > 1 and x in (0, top) and (last is None or x == last):
            yield tuple(word)
        if len(word) - 1 >= max_width:
            return
        rising = rising0 if (len(word) - 1) % 2 == 0 else not rising0
        nxt = range(x + 1, top + 1) if rising else range(0, x)
        for y in nxt:
            word.append(y)
            yield from rec()
            word.pop()

    if last is None or last == first:
        yield (first,)
    yield from rec()


@dataclass(frozen=True)
class HomTable:
    """All squiggles from ``src`` to ``tgt`` (domain ``src``, codomain ``tgt``)."""

    src: str
    tgt: str
    max_dim: int
    max_width: int
    by_dim: tuple[tuple[Squiggle, ...], ...]

    def __iter__(self) -> Iterator[Squiggle]:
        for row in self.by_dim:
            yield from row

    def __len__(self) -> int:
        return sum(len(r) for r in self.by_dim)

    def restrict(self, keep: Callable[[Squiggle], bool]) -> "HomTable":
        rows = tuple(tuple(a for a in row if keep(a)) for row in self.by_dim)
        return HomTable(self.src, self.tgt, self.max_dim, self.max_width, rows)

    def lines(self) -> list[str]:
        return [str(a) for a in self]

    def manifest(self) -> dict:
        return {
            "src": self.src,
            "tgt": self.tgt,
            "maxDim": self.max_dim,
            "maxWidth": self.max_width,
            "count": len(self),
        }


@lru_cache(maxsize=None)
def _hom_dim(src: str, tgt: str, dim: int, max_width: int) -> tuple[Squiggle, ...]:
    words = iter_words(dim, _sign(tgt, dim), _sign(src, dim), max_width)
    return tuple(make(dim, w) for w in sorted(words, key=lambda w: (len(w), w)))


def enumerate_hom(src: str, tgt: str, max_dim: int, max_width: int) -> HomTable:
    rows = tuple(_hom_dim(src, tgt, d, max_width) for d in range(max_dim + 1))
    return HomTable(src, tgt, max_dim, max_width, rows)


def all_squiggles(dim: int, max_width: int) -> Iterator[Squiggle]:
    for tgt in (MINUS, PLUS):
        for src in (MINUS, PLUS):
            yield from _hom_dim(src, tgt, dim, max_width)


def atomic_nondegenerates(dim: int, max_width: int) -> list[Squiggle]:
    return [a for a in all_squiggles(dim, max_width) if is_atomic(a) and not is_degenerate(a)]


# -- subcomputads ------------------------------------------------------------

@dataclass(frozen=True)
class Subcomputad:
    """A subcomputad, stored as its (finite) set of nondegenerate atomic arrows.

    An arrow belongs iff it is an identity or every atom of its normal form
    is listed. Closing under faces keeps widths and dimensions bounded, so the
    atom set of a finitely generated subcomputad is finite and exact.
    """

    generators: frozenset[Squiggle]
    max_dim: int
    max_width: int
    atoms: frozenset[Squiggle] = field(default_factory=frozenset)

    def __contains__(self, a: Squiggle) -> bool:
        if a.is_identity():
            return True
        return all(b in self.atoms for b in normal_form(a).atoms())

    def sorted_atoms(self) -> list[Squiggle]:
        return sorted(self.atoms, key=lambda a: (a.dim, a.width, a.word))

    def lines(self) -> list[str]:
        return [str(a) for a in self.sorted_atoms()]


SubcomputadPresentation = Subcomputad


def close_atoms(seeds: Iterable[Squiggle]) -> frozenset[Squiggle]:
    atoms: set[Squiggle] = set()
    todo = []
    for g in seeds:
        if not g.is_identity():
            todo.extend(normal_form(g).atoms())
    while todo:
        b = todo.pop()
        if b in atoms:
            continue
        atoms.add(b)
        for fc in faces(b):
            if not fc.is_identity():
                todo.extend(normal_form(fc).atoms())
    return frozenset(atoms)


def generate_subcomputad(gens: Iterable[Squiggle], max_dim: int, max_width: int) -> Subcomputad:
    gens = frozenset(gens)
    for g in gens:
        if g.dim > max_dim or g.width > max_width:
            raise TruncationTooSmall(f"generator {g} exceeds dim {max_dim} / width {max_width}")
    return Subcomputad(gens, max_dim, max_width, close_atoms(gens))


def skeleton(s: Subcomputad, k: int) -> Subcomputad:
    """The subcomputad generated by the atoms of dimension at most ``k``."""
    low = [a for a in s.atoms if a.dim <= k]
    return Subcomputad(frozenset(low), s.max_dim, s.max_width, close_atoms(low))


# -- Segal condition -----------------------------------------------------------

def _split(word: Sequence[int], sep: int) -> list[tuple[int, ...] | None]:
    """Tokens of ``word`` cut at ``sep``; ``None`` stands for a separator."""
    out: list[tuple[int, ...] | None] = []
    run: list[int] = []
    for x in word:
        if x == sep:
            if run:
                out.append(tuple(run))
                run = []
            out.append(None)
        else:
            run.append(x)
    if run:
        out.append(tuple(run))
    return out


def segal_splice(a: Squiggle, b: Squiggle) -> Squiggle:
    """The ``(n+m)``-arrow with front face ``a`` and back face ``b``.

    Cutting ``a`` at its ``+`` letters and ``b`` at its ``-`` letters gives two
    token sequences with the same shape as the shared vertex; the splice
    keeps the runs of ``a`` above line ``n`` and the shifted runs of ``b``
    below it.
    """
    n, m = a.dim, b.dim
    if vertex(a, n) != vertex(b, 0):
        raise VerticesDoNotMatch(f"last vertex of {a} differs from first vertex of {b}")
    upper = _split(a.word, n + 1)
    lower = _split(b.word, 0)
    word: list[int] = []
    for ua, lb in zip(upper, lower, strict=True):
        if ua is not None:
            word.extend(ua)
        else:
            assert lb is not None
            word.extend(x + n for x in lb)
    return Squiggle(n + m, tuple(word))


def front_back(c: Squiggle, n: int) -> tuple[Squiggle, Squiggle]:
    d = c.dim
    return (
        act(c, simplex(*range(n + 1), n=d)),
        act(c, simplex(*range(n, d + 1), n=d)),
    )


@dataclass
class SegalReport:
    src: str
    tgt: str
    n: int
    m: int
    max_width: int
    pairs: int = 0
    candidates: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "src": self.src,
            "tgt": self.tgt,
            "n": self.n,
            "m": self.m,
            "maxWidth": self.max_width,
            "pairs": self.pairs,
            "candidates": self.candidates,
            "ok": self.ok,
            "violations": self.violations,
        }


def run_widths(c: Squiggle, n: int) -> tuple[int, int]:
    """Face widths of ``c`` at ``⟨0..n⟩`` and ``⟨n..dim⟩`` read from its runs.

    Letters at level ``<= n`` lie above line ``n``. Maximal runs on each side
    have odd length, so the front face keeps the upper letters and one ``+``
    per lower run, and dually for the back face.
    """
    upper = sum(1 for x in c.word if x <= n)
    lower = len(c.word) - upper
    flips = sum(1 for x, y in zip(c.word, c.word[1:]) if (x <= n) != (y <= n))
    first_upper = c.word[0] <= n
    runs = flips + 1
    upper_runs = (runs + (1 if first_upper else 0)) // 2
    lower_runs = runs - upper_runs
    return upper + lower_runs - 1, lower + upper_runs - 1


def _segal_candidates(src: str, tgt: str, n: int, m: int, max_width: int) -> Iterator[Squiggle]:
    """Candidates whose two faces both have width at most ``max_width``.

    The face widths computed by :func:`run_widths` only grow as a word is
    extended, so branches are cut as soon as either exceeds the bound.
    """
    d = n + m
    top = d + 1
    first, last = _sign(tgt, d), _sign(src, d)
    rising0 = first == 0
    word = [first]

    def rec(up: int, lo: int, up_runs: int, lo_runs: int) -> Iterator[Squiggle]:
        x = word[-1]
        if len(word) > 1 and x == last:
            yield make(d, tuple(word))
        if len(word) - 1 >= 2 * max_width:
            return
        rising = rising0 if (len(word) - 1) % 2 == 0 else not rising0
        for y in (range(x + 1, top + 1) if rising else range(0, x)):
            if y <= n:
                state = (up + 1, lo, up_runs + (x > n), lo_runs)
            else:
                state = (up, lo + 1, up_runs, lo_runs + (x <= n))
            if state[0] + state[3] - 1 > max_width or state[1] + state[2] - 1 > max_width:
                continue
            word.append(y)
            yield from rec(*state)
            word.pop()

    if first == last:
        yield make(d, (first,))
    yield from rec(int(first <= n), int(first > n), int(first <= n), int(first > n))


def segal_check(src: str, tgt: str, n: int, m: int, max_width: int) -> SegalReport:
    """Exhaustive Segal check in one hom.

    Every candidate of dimension ``n+m`` whose faces fit the bound is indexed
    by its two faces (computed with the simplicial action); then each pair
    ``(a, b)`` with a shared vertex must have exactly one filler, equal to
    :func:`segal_splice`.
    """
    if n < 1 or m < 1:
        raise ValueError("the Segal check needs n, m >= 1")
    rep = SegalReport(src, tgt, n, m, max_width)
    by_faces: dict[tuple[Squiggle, Squiggle], list[Squiggle]] = defaultdict(list)
    for c in _segal_candidates(src, tgt, n, m, max_width):
        rep.candidates += 1
        fa, fb = front_back(c, n)
        if fa.width <= max_width and fb.width <= max_width:
            by_faces[fa, fb].append(c)
    lasts = defaultdict(list)
    for b in _hom_dim(src, tgt, m, max_width):
        lasts[vertex(b, 0)].append(b)
    for a in _hom_dim(src, tgt, n, max_width):
        for b in lasts.get(vertex(a, n), ()):
            rep.pairs += 1
            sols = by_faces.pop((a, b), [])
            if len(sols) != 1:
                rep.violations.append(f"{a} | {b}: {len(sols)} fillers")
                continue
            if segal_splice(a, b) != sols[0]:
                rep.violations.append(f"{a} | {b}: splice differs from {sols[0]}")
    for (a, b), sols in by_faces.items():
        rep.violations.append(f"{a} | {b}: filler without matching vertex pair")
    return rep


# -- homotopy category -----------------------------------------------------------

@dataclass
class HomotopyCategory:
    """Objects are 0-arrows, morphisms 1-arrows, composites read off 2-arrows."""

    objects: list[Squiggle]
    morphisms: list[Squiggle]
    source: dict[Squiggle, Squiggle]
    target: dict[Squiggle, Squiggle]
    identity: dict[Squiggle, Squiggle]
    composite: dict[tuple[Squiggle, Squiggle], Squiggle]
    incomplete: list[tuple[Squiggle, Squiggle]]
    max_width: int

    def compose(self, g: Squiggle, f: Squiggle) -> Squiggle:
        try:
            return self.composite[g, f]
        except KeyError:
            raise IncompleteWitness(f"no witness for {g} ∘ {f} within width {self.max_width}")

    def is_discrete(self) -> bool:
        return all(self.source[x] == self.target[x] and self.identity[self.source[x]] == x
                   for x in self.morphisms)


def homotopy_category(table: HomTable) -> HomotopyCategory:
    if table.max_dim < 2 and any(len(r) for r in table.by_dim[1:]):
        raise TruncationTooSmall("a homotopy category needs the table to dimension 2")
    rows = list(table.by_dim) + [()] * (3 - len(table.by_dim))
    objects, morphisms, triangles = list(rows[0]), list(rows[1]), list(rows[2])
    source = {x: act(x, face(1, 1)) for x in morphisms}
    target = {x: act(x, face(0, 1)) for x in morphisms}
    identity = {o: act(o, degeneracy(0, 0)) for o in objects}
    composite: dict[tuple[Squiggle, Squiggle], Squiggle] = {}
    for t in triangles:
        g, h, f = faces(t)
        prev = composite.setdefault((g, f), h)
        if prev != h:
            raise ValueError(f"two composites for {g} ∘ {f}: {prev}, {h}")
    incomplete = []
    outgoing = defaultdict(list)
    for g in morphisms:
        outgoing[source[g]].append(g)
    for f in morphisms:
        for g in outgoing[target[f]]:
            if (g, f) not in composite:
                incomplete.append((g, f))
    return HomotopyCategory(objects, morphisms, source, target, identity, composite,
                            incomplete, table.max_width)
