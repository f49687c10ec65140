"""Fillable arrows, fillable parents and the filtration of parental subcomputads."""
from __future__ import annotations

from dataclasses import dataclass, field

from .computad import Subcomputad, close_atoms, faces
from .errors import (
    Degenerate,
    DimZero,
    FaceNotInBase,
    IsFillable,
    NotAtomic,
    NotFillable,
    NotParental,
    TruncationTooSmall,
)
from .operators import act, face
from .squiggle import NAMED, Squiggle, is_atomic, is_degenerate, make


@dataclass(frozen=True)
class FillableInfo:
    fillable: bool
    depth: int | None = None
    reason: str | None = None


def classify(a: Squiggle) -> FillableInfo:
    if a.is_identity() or not is_atomic(a):
        return FillableInfo(False, reason="not atomic")
    if is_degenerate(a):
        return FillableInfo(False, reason="degenerate")
    if a.word[0] != 0:
        return FillableInfo(False, reason="codomain is +")
    if a.dim == 0:
        return FillableInfo(True)  # f has no depth
    k = a.word[1]
    if k in a.word[2:]:
        return FillableInfo(False, reason=f"letter {k} recurs")
    return FillableInfo(True, depth=k)


def is_fillable(a: Squiggle) -> bool:
    return classify(a).fillable


def distinguished_face(a: Squiggle) -> Squiggle:
    info = classify(a)
    if not info.fillable:
        raise NotFillable(f"{a}: {info.reason}")
    if a.dim == 0:
        raise DimZero(f"{a} has no faces")
    k = info.depth
    d = act(a, face(k, a.dim))
    if k < a.dim:
        return d
    # d = f·b: drop the leading minus
    return make(d.dim, d.word[1:])


def fillable_parent(a: Squiggle) -> Squiggle:
    if a.is_identity() or not is_atomic(a):
        raise NotAtomic(f"{a} is not atomic")
    if is_degenerate(a):
        raise Degenerate(f"{a} is degenerate")
    if is_fillable(a):
        raise IsFillable(f"{a} is already fillable")
    n = a.dim
    if a.word[0] == 0:
        k = a.word[1]
        rest = tuple(x if x < k else x + 1 for x in a.word[2:])
        return make(n + 1, (0, k) + rest)
    # codomain +: a new top line above, entered from and left to -
    return make(n + 1, (0, n + 1) + a.word[1:-1] + (n + 2 if a.word[-1] == n + 1 else 0,))


def other_parent(a: Squiggle) -> Squiggle:
    """For codomain ``-``: the depth ``a₁+1`` fillable arrow with ``a`` as its ``a₁``-face."""
    k = a.word[1]
    rest = tuple(x if x <= k else x + 1 for x in a.word[2:])
    return make(a.dim + 1, (0, k + 1) + rest)


# -- parental subcomputads and the filtration ----------------------------------

@dataclass(frozen=True)
class ParentalReport:
    parental: bool
    missing: tuple[Squiggle, ...]


def is_parental(s: Subcomputad) -> ParentalReport:
    missing = tuple(
        a for a in s.sorted_atoms() if not is_fillable(a) and fillable_parent(a) not in s.atoms
    )
    ok = not missing
    if ok:
        assert NAMED["f"] in s.atoms or not s.atoms
    return ParentalReport(ok, missing)


@dataclass(frozen=True)
class CellCertificate:
    arrow: Squiggle
    kind: str  # "Type2" horn cell or "Type3" boundary cell
    n: int
    k: int
    attaching_faces: dict[int, Squiggle]
    new_arrows: tuple[Squiggle, ...]
    diamond: Squiggle
    diamond_faces: dict[int, Squiggle] = field(default_factory=dict)

    def label(self) -> str:
        return f"Type2{{{self.n},{self.k}}}" if self.kind == "Type2" else f"Type3{{{self.n}}}"

    def to_dict(self) -> dict:
        return {
            "arrow": str(self.arrow),
            "kind": self.kind,
            "label": self.label(),
            "n": self.n,
            "k": self.k,
            "attachingFaces": {str(i): str(x) for i, x in self.attaching_faces.items()},
            "diamond": str(self.diamond),
            "diamondFaces": {str(i): str(x) for i, x in self.diamond_faces.items()},
            "newArrows": [str(x) for x in self.new_arrows],
        }


def _member(x: Squiggle, atoms: frozenset[Squiggle]) -> bool:
    return x in Subcomputad(frozenset(), 0, 0, atoms)


def cell_certificate(a: Squiggle, base: Subcomputad | frozenset[Squiggle]) -> CellCertificate:
    """How ``a`` is glued onto ``base``: along a horn, or along a boundary.

    The new atoms are ``a`` and, when not already present, ``a◇``. A horn
    cell (depth below dimension) glues ``𝟚[Λ^{n,k}] -> 𝟚[Δ^n]``; a boundary
    cell (depth equal to dimension) glues ``𝟛[∂Δ^{n-1}] -> 𝟛[Δ^{n-1}]``.
    """
    atoms = base.atoms if isinstance(base, Subcomputad) else frozenset(base)
    info = classify(a)
    if not info.fillable:
        raise NotFillable(f"{a}: {info.reason}")
    if a.dim == 0:
        raise DimZero(f"{a} has no faces")
    n, k = a.dim, info.depth
    fs = faces(a)
    attaching = {i: fs[i] for i in range(n + 1) if i != k}
    for i, x in attaching.items():
        if not _member(x, atoms):
            raise FaceNotInBase(i)
    dia = distinguished_face(a)
    new = (a,) if dia in atoms else (a, dia)
    if k < n:
        return CellCertificate(a, "Type2", n, k, attaching, new, dia)
    dia_faces = {i: x for i, x in enumerate(faces(dia))}
    for i, x in dia_faces.items():
        if not _member(x, atoms):
            raise FaceNotInBase(i)
    return CellCertificate(a, "Type3", n, k, attaching, new, dia, dia_faces)


@dataclass(frozen=True)
class FiltrationStage:
    index: int
    triple: tuple[int, int, int]
    arrows: tuple[Squiggle, ...]
    certificates: tuple[CellCertificate, ...]

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "triple": list(self.triple),
            "arrows": [str(a) for a in self.arrows],
            "certificates": [c.to_dict() for c in self.certificates],
        }


def filtration(small: Subcomputad, big: Subcomputad) -> list[FiltrationStage]:
    for name, s in (("source", small), ("target", big)):
        rep = is_parental(s)
        if not rep.parental:
            raise NotParental(f"{name} is not parental: missing parents of "
                              + ", ".join(map(str, rep.missing)))
    if not small.atoms <= big.atoms:
        raise ValueError("the source is not contained in the target")
    need = max((a.width for a in big.atoms), default=0) + 1
    if big.max_width < need:
        raise TruncationTooSmall(f"width bound {big.max_width} < {need}")
    new = [a for a in big.atoms - small.atoms if is_fillable(a)]
    groups: dict[tuple[int, int, int], list[Squiggle]] = {}
    for a in new:
        groups.setdefault((a.width, classify(a).depth or 0, a.dim), []).append(a)
    stages = []
    current = small.atoms
    for i, triple in enumerate(sorted(groups)):
        xs = tuple(sorted(groups[triple], key=lambda a: a.word))
        certs = tuple(cell_certificate(a, current) for a in xs)
        current = close_atoms(list(current) + list(xs))
        stages.append(FiltrationStage(i, triple, xs, certs))
    if current != big.atoms:
        raise ValueError("the stages do not regenerate the target")
    return stages
