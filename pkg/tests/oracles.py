"""Brute-force reference implementations used as test oracles.

Nothing here imports the package's algorithms; each function is written
straight from the definitions so the package can be checked against it.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement, product


def strictly_undulating(dim: int, word: tuple[int, ...]) -> bool:
    top = dim + 1
    if not word or word[0] not in (0, top) or word[-1] not in (0, top):
        return False
    if any(not 0 <= x <= top for x in word):
        return False
    for i in range(len(word) - 1):
        up = (i % 2 == 0) == (word[0] == 0)
        if up and not word[i] < word[i + 1]:
            return False
        if not up and not word[i] > word[i + 1]:
            return False
    return True


def weakly_undulating(dim: int, word: tuple[int, ...]) -> bool:
    top = dim + 1
    if not word or word[0] not in (0, top) or word[-1] not in (0, top):
        return False
    for i in range(len(word) - 1):
        up = (i % 2 == 0) == (word[0] == 0)
        if up and not word[i] <= word[i + 1]:
            return False
        if not up and not word[i] >= word[i + 1]:
            return False
    return True


def all_words(dim: int, max_width: int):
    """Every word over ``0..dim+1`` of width at most ``max_width``."""
    for length in range(1, max_width + 2):
        yield from product(range(dim + 2), repeat=length)


def brute_squiggles(dim: int, max_width: int) -> set[tuple[int, ...]]:
    return {w for w in all_words(dim, max_width) if strictly_undulating(dim, w)}


@lru_cache(maxsize=None)
def all_reductions(word: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """Terminal words reachable by deleting adjacent equal pairs in any order."""
    spots = [i for i in range(len(word) - 1) if word[i] == word[i + 1]]
    if not spots:
        return frozenset([word])
    out: set[tuple[int, ...]] = set()
    for i in spots:
        out |= all_reductions(word[:i] + word[i + 2:])
    return frozenset(out)


def operator_list(m: int, n: int):
    """Monotone maps ``[m] -> [n]`` as value tuples."""
    if m < 0:
        yield ()
        return
    yield from combinations_with_replacement(range(n + 1), m + 1)


def compose_values(beta: tuple[int, ...], alpha: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(beta[v] for v in alpha)


def elementary_factors(values: tuple[int, ...], n: int) -> list[tuple[str, int, int]]:
    """Factor a monotone ``[m] -> [n]`` as degeneracies then faces.

    Returns steps ``(kind, i, dim_after)`` in order of application.
    """
    steps = []
    vals = list(values)
    # collapse repeats: each σ^i merges positions i and i+1
    i = 0
    while i < len(vals) - 1:
        if vals[i] == vals[i + 1]:
            steps.append(("s", i, len(vals) - 2))
            del vals[i + 1]
        else:
            i += 1
    image = set(vals)
    cur = len(vals) - 1
    for v in range(n + 1):
        if v not in image:
            cur += 1
            steps.append(("d", v, cur))
    return steps


def act_by_hand(dim: int, word: tuple[int, ...], values: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Act on a squiggle by elementary steps, relabelling levels and reducing.

    A face ``δ^i`` lowers every level above ``i`` by one; a degeneracy
    ``σ^i`` raises every level above ``i`` by one. Both are followed by
    deleting matched adjacent pairs.
    """
    cur = list(word)
    d = dim
    # the steps act on the right, so apply them from the last one
    for kind, i, after in reversed(elementary_factors(values, dim)):
        if kind == "d":
            cur = [x - 1 if x > i else x for x in cur]
            d -= 1
        else:
            cur = [x + 1 if x > i else x for x in cur]
            d += 1
        (cur,) = all_reductions(tuple(cur))
        cur = list(cur)
    return d, tuple(cur)


def crossings(word: tuple[int, ...], j: int) -> int:
    """How many times the path crosses line ``j``: levels ``<= j`` lie above it."""
    return sum(1 for x, y in zip(word, word[1:]) if (x <= j) != (y <= j))


def monotone_maps(m: int, n: int, top: bool = False, bottom: bool = False):
    """Monotone ``[m] -> [n]`` as value tuples, optionally fixing top or bottom."""
    for v in operator_list(m, n):
        if top and (m < 0 or v[-1] != n):
            continue
        if bottom and (m < 0 or v[0] != 0):
            continue
        yield v


def sum_values(a: tuple[int, ...], atgt: int, b: tuple[int, ...]) -> tuple[int, ...]:
    return a + tuple(v + atgt + 1 for v in b)


def chains(k: int, lo: int, hi: int, maps):
    """``k``-chains of objects in ``lo..hi`` with a morphism ``maps(p, q)`` per step."""
    for objs in product(range(lo, hi + 1), repeat=k + 1):
        for ms in product(*(list(maps(objs[i], objs[i + 1])) for i in range(k))):
            yield objs, ms


def coequalizer_classes(k: int, bound: int) -> tuple[int, int]:
    """Classes of bounded pairs ``(x, y)`` under ``(x ⊕ z, y) ~ (x, z ⊕ y)``,
    generated from every bounded triple ``(x, z, y)``; also the pair count."""
    b_maps = lambda p, q: monotone_maps(p, q, bottom=True)
    t_maps = lambda p, q: monotone_maps(p, q, top=True)
    xs = list(chains(k, 0, bound, b_maps))
    ys = list(chains(k, 0, bound, t_maps))
    zs = list(chains(k, -1, bound, lambda p, q: monotone_maps(p, q)))
    pairs = {(x, y) for x in xs for y in ys}
    parent = {p: p for p in pairs}

    def find(u):
        while parent[u] != u:
            u = parent[u]
        return u

    def plus(c1, c2):
        (o1, m1), (o2, m2) = c1, c2
        return (tuple(a + b + 1 for a, b in zip(o1, o2)),
                tuple(sum_values(a, o1[i + 1], b) for i, (a, b) in enumerate(zip(m1, m2))))

    for x in xs:
        for z in zs:
            xz = plus(x, z)
            for y in ys:
                left, right = (xz, y), (x, plus(z, y))
                if left in pairs and right in pairs:
                    parent[find(left)] = find(right)
    return len({find(p) for p in pairs}), len(pairs)
