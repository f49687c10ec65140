"""Simplicial operators and their right action on squiggles.

An operator ``[m] -> [n]`` is a weakly monotone map stored as its value
vector. Ordinals ``[-1]`` (empty) are allowed so the same type serves the
augmented category.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator, Sequence

from .errors import DimensionMismatch, IndexOutOfRange, NotComposable
from .squiggle import Squiggle, make


@dataclass(frozen=True, slots=True)
class SimplicialOperator:
    src: int
    tgt: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.src < -1 or self.tgt < -1:
            raise IndexOutOfRange(f"ordinals must be >= -1, got [{self.src}]->[{self.tgt}]")
        if len(self.values) != self.src + 1:
            raise ValueError(f"expected {self.src + 1} values, got {len(self.values)}")
        prev = 0
        for v in self.values:
            if not prev <= v <= self.tgt:
                raise ValueError(f"values {self.values} not monotone into [{self.tgt}]")
            prev = v

    def __call__(self, i: int) -> int:
        return self.values[i]

    @property
    def top_preserving(self) -> bool:
        return self.src >= 0 and self.tgt >= 0 and self.values[-1] == self.tgt

    @property
    def bottom_preserving(self) -> bool:
        return self.src >= 0 and self.tgt >= 0 and self.values[0] == 0

    def is_injective(self) -> bool:
        return all(x < y for x, y in zip(self.values, self.values[1:]))

    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.tgt + 1))

    def is_identity(self) -> bool:
        return self.src == self.tgt and self.values == tuple(range(self.src + 1))

    def __str__(self) -> str:
        body = " ".join(map(str, self.values))
        return f"[{self.src}->{self.tgt}: {body}]" if body else f"[{self.src}->{self.tgt}:]"

    def __repr__(self) -> str:
        return f"SimplicialOperator{self}"


def op(src: int, tgt: int, values: Sequence[int]) -> SimplicialOperator:
    return SimplicialOperator(src, tgt, tuple(values))


def identity(n: int) -> SimplicialOperator:
    return SimplicialOperator(n, n, tuple(range(n + 1)))


def face(i: int, n: int) -> SimplicialOperator:
    """``δ^i : [n-1] -> [n]``, skipping ``i``."""
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"face index {i} outside 0..{n}")
    return SimplicialOperator(n - 1, n, tuple(k if k < i else k + 1 for k in range(n)))


def degeneracy(i: int, n: int) -> SimplicialOperator:
    """``σ^i : [n+1] -> [n]``, hitting ``i`` twice."""
    if not 0 <= i <= n:
        raise IndexOutOfRange(f"degeneracy index {i} outside 0..{n}")
    return SimplicialOperator(n + 1, n, tuple(k if k <= i else k - 1 for k in range(n + 2)))


def simplex(*vertices: int, n: int) -> SimplicialOperator:
    """The operator ``⟨v0, ..., vm⟩ : [m] -> [n]``."""
    return SimplicialOperator(len(vertices) - 1, n, tuple(vertices))


def compose(beta: SimplicialOperator, alpha: SimplicialOperator) -> SimplicialOperator:
    """``β ∘ α`` as functions."""
    if beta.src != alpha.tgt:
        raise NotComposable(f"{beta} cannot follow {alpha}")
    return SimplicialOperator(alpha.src, beta.tgt, tuple(beta.values[v] for v in alpha.values))


def ez_factorize(alpha: SimplicialOperator) -> tuple[SimplicialOperator, SimplicialOperator]:
    """Split ``α = δ ∘ σ`` with ``σ`` surjective and ``δ`` injective."""
    image = sorted(set(alpha.values))
    rank = {v: k for k, v in enumerate(image)}
    k = len(image) - 1
    sigma = SimplicialOperator(alpha.src, k, tuple(rank[v] for v in alpha.values))
    delta = SimplicialOperator(k, alpha.tgt, tuple(image))
    return sigma, delta


def generator_word(alpha: SimplicialOperator) -> list[SimplicialOperator]:
    """Elementary operators whose composite is ``α``, in order of application."""
    sigma, delta = ez_factorize(alpha)
    steps = []
    vals = list(sigma.values)
    i = 0
    while i < len(vals) - 1:
        if vals[i] == vals[i + 1]:
            steps.append(degeneracy(i, len(vals) - 2))
            del vals[i + 1]
        else:
            i += 1
    cur = delta.src
    image = set(delta.values)
    for v in range(delta.tgt + 1):
        if v not in image:
            cur += 1
            steps.append(face(v, cur))
    return steps


def operators(m: int, n: int) -> Iterator[SimplicialOperator]:
    """All monotone maps ``[m] -> [n]`` in lexicographic order."""
    if m == -1:
        yield SimplicialOperator(-1, n, ())
        return
    if n == -1:
        return
    for values in combinations_with_replacement(range(n + 1), m + 1):
        yield SimplicialOperator(m, n, values)


@lru_cache(maxsize=None)
def interval_rep(alpha: SimplicialOperator) -> SimplicialOperator:
    """The strict-interval map ``[n+1] -> [m+1]`` attached to ``α : [m] -> [n]``.

    Level ``j`` goes to the number of vertices that ``α`` sends below ``j``.
    """
    m, n = alpha.src, alpha.tgt
    vals = alpha.values
    out = []
    i = 0
    for j in range(n + 2):
        while i <= m and vals[i] < j:
            i += 1
        out.append(i)
    return SimplicialOperator(n + 1, m + 1, tuple(out))


def from_interval(iota: SimplicialOperator) -> SimplicialOperator:
    """Inverse of :func:`interval_rep` on top-and-bottom preserving maps."""
    n, m = iota.src - 1, iota.tgt - 1
    if iota.src < 1 or iota.values[0] != 0 or iota.values[-1] != iota.tgt:
        raise ValueError(f"{iota} does not preserve top and bottom")
    return SimplicialOperator(
        m, n, tuple(sum(1 for j in range(1, n + 1) if iota.values[j] <= i) for i in range(m + 1))
    )


def reduce_word(word: Sequence[int]) -> tuple[int, ...]:
    """Delete adjacent equal pairs until none remain."""
    stack: list[int] = []
    for x in word:
        if stack and stack[-1] == x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def reduce(dim: int, word: Sequence[int]) -> Squiggle:
    """Reduce an undulating word to the strictly undulating squiggle it names."""
    return Squiggle(dim, reduce_word(word))


def act(a: Squiggle, alpha: SimplicialOperator) -> Squiggle:
    """The right action ``a · α``."""
    if alpha.tgt != a.dim or alpha.src < 0:
        raise DimensionMismatch(f"cannot act on a {a.dim}-arrow by {alpha}")
    ir = interval_rep(alpha).values
    return make(alpha.src, reduce_word([ir[x] for x in a.word]))


def crossing_count(a: Squiggle, j: int) -> int:
    """How many segments of ``a`` cross line ``j``."""
    if not 0 <= j <= a.dim:
        raise IndexOutOfRange(f"line {j} outside 0..{a.dim}")
    w = a.word
    return sum(1 for x, y in zip(w, w[1:]) if (x <= j) != (y <= j))


def vertex(a: Squiggle, j: int) -> Squiggle:
    if not 0 <= j <= a.dim:
        raise IndexOutOfRange(f"vertex {j} outside 0..{a.dim}")
    return act(a, SimplicialOperator(0, a.dim, (j,)))


def edge(a: Squiggle, i: int, j: int) -> Squiggle:
    return act(a, SimplicialOperator(1, a.dim, (i, j)))
