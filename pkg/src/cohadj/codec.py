"""Text forms, ASCII pictures and hammock grids for squiggles."""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import SquiggleSyntaxError
from .squiggle import Squiggle, validate

_SQ = re.compile(r"\s*(\d+)\s*:\s*\(([^()]*)\)\s*$")


def parse(text: str) -> Squiggle:
    """Parse ``dim:(letter,...)``; whitespace is ignored."""
    return validate(*parse_raw(text))


def parse_raw(text: str) -> tuple[int, list[int | str]]:
    """Syntax only: the dimension and the letters, not yet validated."""
    m = _SQ.match(text)
    if not m:
        pos = _first_bad_position(text)
        raise SquiggleSyntaxError("expected dim:(letters)", pos)
    dim = int(m.group(1))
    letters: list[int | str] = []
    offset = m.start(2)
    for chunk in m.group(2).split(","):
        token = chunk.strip()
        if token in ("-", "−", "+"):
            letters.append(token)
        elif token.isdigit():
            letters.append(int(token))
        else:
            raise SquiggleSyntaxError(f"bad letter {token!r}", offset)
        offset += len(chunk) + 1
    return dim, letters


def _first_bad_position(text: str) -> int:
    allowed = set("0123456789:(),-+− \t")
    for i, ch in enumerate(text):
        if ch not in allowed:
            return i
    return len(text)


def render(a: Squiggle) -> str:
    return str(a)


def picture(a: Squiggle) -> str:
    """ASCII drawing: dotted lines ``0..n`` and the path, one column per letter."""
    n = a.dim
    height = 2 * (n + 1) + 1
    width = 2 * len(a.word)
    rows = [[" "] * width for _ in range(height)]
    for line in range(n + 1):
        r = 2 * line + 1
        for c in range(width):
            rows[r][c] = "."
    for i, level in enumerate(a.word):
        rows[2 * level][2 * i] = "*"
        if i + 1 < len(a.word):
            lo, hi = sorted((level, a.word[i + 1]))
            for r in range(2 * lo + 1, 2 * hi):
                rows[r][2 * i + 1] = "|"
    labels = ["-"] + [str(k) for k in range(1, n + 1)] + ["+"]
    out = []
    for r, row in enumerate(rows):
        tag = labels[r // 2] if r % 2 == 0 else f"l{r // 2}"
        out.append(f"{tag:>3} {''.join(row).rstrip()}")
    return "\n".join(out)


_OP = re.compile(r"\s*\[\s*(-?\d+)\s*->\s*(-?\d+)\s*:([^\]]*)\]\s*$")


def parse_operator_text(text: str) -> tuple[int, int, tuple[int, ...]]:
    """Parse ``[m->n: v0 v1 ... vm]`` into ``(m, n, values)``."""
    m = _OP.match(text)
    if not m:
        raise SquiggleSyntaxError("expected [m->n: v0 ... vm]", _first_bad_position(text))
    body = m.group(3).replace(",", " ").split()
    try:
        values = tuple(int(v) for v in body)
    except ValueError:
        raise SquiggleSyntaxError("operator values must be integers", m.start(3)) from None
    return int(m.group(1)), int(m.group(2)), values


def render_operator_text(src: int, tgt: int, values: tuple[int, ...]) -> str:
    return f"[{src}->{tgt}: {' '.join(map(str, values))}]".replace(": ]", ":]")


@dataclass(frozen=True)
class HammockGrid:
    rows: int
    cols: int
    cells: tuple[str, ...]  # one string per line, '+'/'-' per column

    def __str__(self) -> str:
        return "\n".join(" ".join(row) for row in self.cells)


def hammock_grid(a: Squiggle) -> HammockGrid:
    """One column per letter (the outer two are the borders).

    Line ``j`` reads ``+`` in a column when the squiggle passes that column
    strictly below the line, i.e. at a level greater than ``j``.
    """
    cells = tuple(
        "".join("+" if j < level else "-" for level in a.word) for j in range(a.dim + 1)
    )
    return HammockGrid(a.dim + 1, len(a.word), cells)

