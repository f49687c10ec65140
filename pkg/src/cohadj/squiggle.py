"""Squiggles: strictly undulating words over the levels of n+1 lines.

A squiggle of dimension ``n`` is stored as a tuple of integers in
``0..n+1``, where ``0`` is the sign ``-`` and ``n+1`` is the sign ``+``.
Level ``i`` (``1 <= i <= n``) is the gap below line ``i-1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import (
    DimensionMismatch,
    EndpointNotSign,
    GapOutOfRange,
    IndexOutOfRange,
    NotComposable,
    UndulationViolation,
)

Letter = Union[int, str]

MINUS = "-"
PLUS = "+"


@dataclass(frozen=True, slots=True, order=True)
class Squiggle:
    dim: int
    word: tuple[int, ...]

    def __post_init__(self) -> None:
        _check(self.dim, self.word)

    @property
    def top(self) -> int:
        return self.dim + 1

    @property
    def width(self) -> int:
        return len(self.word) - 1

    @property
    def cod(self) -> str:
        return MINUS if self.word[0] == 0 else PLUS

    @property
    def dom(self) -> str:
        return MINUS if self.word[-1] == 0 else PLUS

    def is_identity(self) -> bool:
        return len(self.word) == 1

    def letters(self) -> tuple[Letter, ...]:
        """The word with signs written as ``'-'`` and ``'+'``."""
        top = self.dim + 1
        return tuple(MINUS if x == 0 else PLUS if x == top else x for x in self.word)

    def __str__(self) -> str:
        return f"{self.dim}:({','.join(str(x) for x in self.letters())})"

    def __repr__(self) -> str:
        return f"Squiggle({self})"


def make(dim: int, word: Sequence[int]) -> Squiggle:
    """Build a squiggle from an already valid internal word, skipping checks."""
    obj = object.__new__(Squiggle)
    object.__setattr__(obj, "dim", dim)
    object.__setattr__(obj, "word", tuple(word))
    return obj


def encode(dim: int, word: Iterable[Letter]) -> tuple[int, ...]:
    out = []
    for x in word:
        if x == MINUS or x == "−":
            out.append(0)
        elif x == PLUS:
            out.append(dim + 1)
        elif isinstance(x, int) and not isinstance(x, bool):
            out.append(x)
        else:
            raise TypeError(f"not a letter: {x!r}")
    return tuple(out)


def _first_violation(dim: int, word: Sequence[int], strict: bool) -> Exception | None:
    if dim < 0:
        return DimensionMismatch(f"negative dimension {dim}")
    if not word:
        return EndpointNotSign(0)
    top = dim + 1
    for i in (0, len(word) - 1):
        if word[i] not in (0, top):
            return EndpointNotSign(i)
    for i, x in enumerate(word):
        if not 0 <= x <= top:
            return GapOutOfRange(i, x, dim)
    up = word[0] == 0  # direction of the step at even positions
    for i in range(len(word) - 1):
        x, y = word[i], word[i + 1]
        rising = up if i % 2 == 0 else not up
        ok = (x < y if rising else x > y) if strict else (x <= y if rising else x >= y)
        if not ok:
            return UndulationViolation(i)
    return None


def _check(dim: int, word: Sequence[int]) -> None:
    err = _first_violation(dim, word, strict=True)
    if err is not None:
        raise err


def _diagnose(dim: int, word: Iterable[Letter], strict: bool) -> Exception | None:
    # numeric letters are gaps 1..dim; the signs must be spelled as signs
    word = list(word)
    enc = encode(dim, word)
    err = _first_violation(dim, enc, strict)
    if isinstance(err, EndpointNotSign):
        return err
    for i, x in enumerate(word):
        if isinstance(x, int) and not 1 <= x <= dim:
            return EndpointNotSign(i) if i in (0, len(word) - 1) else GapOutOfRange(i, x, dim)
    return err


def validate(dim: int, word: Iterable[Letter]) -> Squiggle:
    """Return the squiggle, or raise the diagnosis for the first bad index."""
    word = list(word)
    err = _diagnose(dim, word, strict=True)
    if err is not None:
        raise err
    return make(dim, encode(dim, word))


def diagnose(dim: int, word: Iterable[Letter]) -> Exception | None:
    return _diagnose(dim, word, strict=True)


def is_valid(dim: int, word: Iterable[Letter]) -> bool:
    return diagnose(dim, word) is None


def is_undulating(dim: int, word: Iterable[Letter]) -> bool:
    """The weak condition: non-strict alternation, sign endpoints."""
    return _diagnose(dim, word, strict=False) is None


def identity(sign: str, dim: int = 0) -> Squiggle:
    return make(dim, (0,) if sign == MINUS else (dim + 1,))


def compose(b: Squiggle, a: Squiggle) -> Squiggle:
    """The composite ``b ∘ a``: drop the last letter of ``b`` and append ``a``."""
    if b.dim != a.dim:
        raise DimensionMismatch(f"dimensions {b.dim} and {a.dim} differ")
    if b.word[-1] != a.word[0]:
        raise NotComposable(f"domain of {b} is not the codomain of {a}")
    return make(a.dim, b.word[:-1] + a.word)


def compose_all(arrows: Sequence[Squiggle]) -> Squiggle:
    out = arrows[-1]
    for b in reversed(arrows[:-1]):
        out = compose(b, out)
    return out


def whisker(side: str, gen: str, a: Squiggle) -> Squiggle:
    """Whisker ``a`` by a degenerate copy of ``f`` or ``u``.

    ``side='left'`` gives ``gen ∘ a`` (a sign is prepended), ``side='right'``
    gives ``a ∘ gen`` (a sign is appended).
    """
    top = a.dim + 1
    if gen not in ("f", "u") or side not in ("left", "right"):
        raise ValueError(f"bad whisker {side!r}/{gen!r}")
    # f = (-,+), u = (+,-)
    first, last = (0, top) if gen == "f" else (top, 0)
    if side == "left":
        if a.word[0] != last:
            raise NotComposable(f"{gen} cannot follow {a}")
        return make(a.dim, (first,) + a.word)
    if a.word[-1] != first:
        raise NotComposable(f"{gen} cannot precede {a}")
    return make(a.dim, a.word + (last,))


def is_atomic(a: Squiggle) -> bool:
    top = a.dim + 1
    return len(a.word) > 1 and all(0 < x < top for x in a.word[1:-1])


def is_degenerate_at(a: Squiggle, i: int) -> bool:
    if not 0 <= i < a.dim:
        raise IndexOutOfRange(f"degeneracy index {i} outside 0..{a.dim - 1}")
    return (i + 1) not in a.word


def is_degenerate(a: Squiggle) -> bool:
    return any((i + 1) not in a.word for i in range(a.dim))


def _named() -> dict[str, Squiggle]:
    return {
        "f": validate(0, "-+"),
        "u": validate(0, "+-"),
        "eta": validate(1, ["+", 1, "+"]),
        "eps": validate(1, ["-", 1, "-"]),
        "alpha": validate(2, ["+", 1, 2, "-"]),
        "beta": validate(2, ["-", 2, 1, "+"]),
        "omega": validate(3, ["-", 3, 1, 2, "-"]),
        "tau": validate(3, ["-", 2, 1, 3, "-"]),
        "mu": validate(2, ["-", 2, 1, 2, "-"]),
    }


NAMED: dict[str, Squiggle] = _named()


def alpha_family(n: int) -> Squiggle:
    """The 2-arrow starting at ``+`` and alternating ``1, 2`` for ``n`` steps."""
    mids = [1 + (i % 2) for i in range(n)]
    return make(2, (3, *mids, 0 if n % 2 == 0 else 3))


def beta_family(n: int) -> Squiggle:
    """Vertical reflection of :func:`alpha_family`."""
    a = alpha_family(n)
    return make(2, tuple(3 - x for x in a.word))
