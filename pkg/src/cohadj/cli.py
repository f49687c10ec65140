"""Command-line driver: ``cohadj <subcommand> ...``.

Exit status is 0 on success, 1 when a verification finds a violation (the
witnesses are printed) and 2 on usage errors or malformed input.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from typing import Any, Callable

from . import bridge, codec, computad, fillable
from .errors import CohadjError, LawViolation, SquiggleSyntaxError
from .monad_lab import algebras, cones
from .monad_lab.categories import FinCategory, FinFunctor, FinMonad, load_json
from .monad_lab.examples import MONADS
from .operators import SimplicialOperator, act, crossing_count, vertex
from .squiggle import NAMED, Squiggle, compose_all, diagnose, is_atomic, is_degenerate

DEFAULT_WIDTH = 8


class UsageError(Exception):
    pass


class Result:
    """What a subcommand produced: text lines, a JSON payload, a verdict."""

    def __init__(self, lines: list[str], payload: Any, ok: bool = True, bounds: dict | None = None):
        self.lines, self.payload, self.ok, self.bounds = lines, payload, ok, bounds


# -- argument parsing helpers ----------------------------------------------------

def squiggle_arg(text: str) -> Squiggle:
    text = text.strip()
    if text in NAMED:
        return NAMED[text]
    return codec.parse(text)


def set_arg(text: str) -> list[Squiggle]:
    """``{eps,beta}`` or ``eps,beta``; squiggle literals may be mixed in."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    items, depth, cur = [], 0, ""
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append(cur)
            cur = ""
        else:
            cur += ch
    if cur.strip():
        items.append(cur)
    return [squiggle_arg(x) for x in items if x.strip()]


def operator_arg(text: str) -> SimplicialOperator:
    src, tgt, values = codec.parse_operator_text(text)
    return SimplicialOperator(src, tgt, values)


def sign_arg(text: str) -> str:
    t = text.replace("−", "-")
    if t not in ("-", "+"):
        raise UsageError(f"expected a sign, got {text!r}")
    return t


def pair_arg(text: str) -> tuple[str, str]:
    t = text.replace("−", "-").replace(",", "").replace("(", "").replace(")", "").strip()
    if len(t) != 2 or any(c not in "+-" for c in t):
        raise UsageError(f"expected a hom pair such as '-,+', got {text!r}")
    return (t[0], t[1])


def monad_arg(text: str) -> FinMonad:
    if text in MONADS:
        return MONADS[text]()
    return FinMonad.from_json(load_json(text))


def _width(args: argparse.Namespace) -> int:
    if getattr(args, "max_width", None) is not None:
        return args.max_width
    env = os.environ.get("COHADJ_MAX_WIDTH")
    if env is None:
        return DEFAULT_WIDTH
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"COHADJ_MAX_WIDTH must be an integer, got {env!r}") from None


def _bounds(**kw: Any) -> dict:
    return {k: v for k, v in kw.items() if v is not None}


# -- squiggle commands -----------------------------------------------------------

def cmd_validate(args: argparse.Namespace) -> Result:
    if args.literal in NAMED:
        a = NAMED[args.literal]
        return Result([str(a)], {"valid": True, "squiggle": str(a)})
    dim, letters = codec.parse_raw(args.literal)
    err = diagnose(dim, letters)
    if err is None:
        a = codec.parse(args.literal)
        return Result([str(a)], {"valid": True, "squiggle": str(a)})
    where = getattr(err, "index", None)
    return Result([f"invalid: {err}"],
                  {"valid": False, "error": type(err).__name__, "index": where, "message": str(err)}, ok=False)


def cmd_compose(args: argparse.Namespace) -> Result:
    a = compose_all([squiggle_arg(x) for x in args.squiggles])
    return Result([str(a)], {"squiggle": str(a)})


def cmd_act(args: argparse.Namespace) -> Result:
    a, op = squiggle_arg(args.squiggle), operator_arg(args.op)
    b = act(a, op)
    return Result([str(b)], {"squiggle": str(b)})


def cmd_vertices(args: argparse.Namespace) -> Result:
    a = squiggle_arg(args.squiggle)
    rows = [{"index": j, "vertex": str(vertex(a, j)), "crossings": crossing_count(a, j)}
            for j in range(a.dim + 1)]
    return Result([f"{r['index']}: {r['vertex']}  crossings={r['crossings']}" for r in rows],
                  {"squiggle": str(a), "vertices": rows})


def cmd_decompose(args: argparse.Namespace) -> Result:
    parts = computad.atomic_decompose(squiggle_arg(args.squiggle))
    return Result([str(p) for p in parts], {"atoms": [str(p) for p in parts]})


def cmd_normal_form(args: argparse.Namespace) -> Result:
    nf = computad.normal_form(squiggle_arg(args.squiggle))
    rows = [{"atom": str(b), "operator": str(s)} for b, s in nf.factors]
    return Result([f"{r['atom']} · {r['operator']}" for r in rows], {"factors": rows})


def cmd_atomic(args: argparse.Namespace) -> Result:
    a = squiggle_arg(args.squiggle)
    info = fillable.classify(a)
    payload = {"squiggle": str(a), "atomic": is_atomic(a), "degenerate": is_degenerate(a),
               "fillable": info.fillable, "depth": info.depth, "reason": info.reason}
    lines = [f"atomic: {payload['atomic']}", f"degenerate: {payload['degenerate']}",
             f"fillable: {info.fillable}" + (f" (depth {info.depth})" if info.depth is not None else "")
             + (f" ({info.reason})" if info.reason else "")]
    return Result(lines, payload)


def cmd_render(args: argparse.Namespace) -> Result:
    a = squiggle_arg(args.squiggle)
    pic = codec.picture(a)
    return Result(pic.splitlines(), {"squiggle": str(a), "picture": pic})


def cmd_hammock(args: argparse.Namespace) -> Result:
    g = codec.hammock_grid(squiggle_arg(args.squiggle))
    return Result(str(g).splitlines(), {"rows": g.rows, "cols": g.cols, "cells": list(g.cells)})


# -- computads -------------------------------------------------------------------

def cmd_enumerate(args: argparse.Namespace) -> Result:
    w = _width(args)
    table = computad.enumerate_hom(sign_arg(args.src), sign_arg(args.tgt), args.max_dim, w)
    lines = table.lines()
    return Result(lines, {"from": table.src, "to": table.tgt, "count": len(table),
                          "squiggles": [str(a) for a in table]},
                  bounds=_bounds(max_dim=args.max_dim, max_width=w))


def cmd_segal(args: argparse.Namespace) -> Result:
    w = _width(args)
    rep = computad.segal_check(sign_arg(args.src), sign_arg(args.tgt), args.n, args.m, w)
    lines = [f"pairs: {rep.pairs}", f"candidates: {rep.candidates}", f"ok: {rep.ok}"] + rep.violations
    return Result(lines, {"pairs": rep.pairs, "candidates": rep.candidates, "ok": rep.ok,
                          "violations": rep.violations},
                  ok=rep.ok, bounds=_bounds(n=args.n, m=args.m, max_width=w))


def _subcomputad(text: str, args: argparse.Namespace) -> computad.Subcomputad:
    return computad.generate_subcomputad(set_arg(text), args.max_dim, _width(args))


def cmd_subcomputad(args: argparse.Namespace) -> Result:
    s = _subcomputad(args.generators, args)
    return Result(s.lines(), {"generators": sorted(str(g) for g in s.generators), "atoms": s.lines()},
                  bounds=_bounds(max_dim=args.max_dim, max_width=_width(args)))


def cmd_parental(args: argparse.Namespace) -> Result:
    rep = fillable.is_parental(_subcomputad(args.generators, args))
    missing = [str(a) for a in rep.missing]
    return Result([f"parental: {rep.parental}"] + [f"missing parent of {m}" for m in missing],
                  {"parental": rep.parental, "missing": missing}, ok=rep.parental,
                  bounds=_bounds(max_dim=args.max_dim, max_width=_width(args)))


def cmd_filtrate(args: argparse.Namespace) -> Result:
    small, big = _subcomputad(args.src, args), _subcomputad(args.tgt, args)
    stages = fillable.filtration(small, big)
    lines = []
    for st in stages:
        labels = ", ".join(f"{c.arrow} {c.label()}" for c in st.certificates)
        lines.append(f"stage {st.index} {st.triple}: {labels}")
    return Result(lines, {"stages": [st.to_dict() for st in stages]},
                  bounds=_bounds(max_dim=args.max_dim, max_width=_width(args)))


def cmd_parent(args: argparse.Namespace) -> Result:
    a = squiggle_arg(args.squiggle)
    p = fillable.fillable_parent(a)
    o = fillable.other_parent(a)
    return Result([f"fillable parent: {p}", f"other parent: {o}"],
                  {"squiggle": str(a), "fillableParent": str(p), "otherParent": str(o)})


def cmd_cell_cert(args: argparse.Namespace) -> Result:
    a = squiggle_arg(args.squiggle)
    base = _subcomputad(args.base, args)
    c = fillable.cell_certificate(a, base)
    lines = [f"{a} {c.label()}"] + [f"face {i}: {x}" for i, x in c.attaching_faces.items()]
    lines.append("new arrows: " + ", ".join(str(x) for x in c.new_arrows))
    return Result(lines, c.to_dict(), bounds=_bounds(max_dim=args.max_dim, max_width=_width(args)))


# -- bridge ----------------------------------------------------------------------

def cmd_to_ss(args: argparse.Namespace) -> Result:
    x = bridge.squiggle_to_ss(squiggle_arg(args.squiggle))
    return Result([str(x)], x.to_dict())


def cmd_from_ss(args: argparse.Namespace) -> Result:
    pair = pair_arg(args.pair)
    objects = tuple(int(v) for v in args.objects.split(","))
    morphisms = tuple(operator_arg(m) for m in (args.mor or []))
    x = bridge.SSArrow(pair, objects, morphisms)
    w = _width(args)
    a = bridge.ss_to_squiggle(x, w)
    return Result([str(a)], {"squiggle": str(a)}, bounds=_bounds(max_width=w))


def cmd_coeq_check(args: argparse.Namespace) -> Result:
    rep = bridge.coequalizer_check(args.k, args.bound)
    d = rep.to_dict()
    lines = [f"pairs: {rep.pairs}", f"classes: {rep.classes}", f"images: {rep.images}", f"ok: {rep.ok}"]
    lines += rep.split_fibres + [f"missed {t}" for t in rep.missed_targets]
    return Result(lines, d, ok=rep.ok, bounds=_bounds(k=args.k, ordinal_bound=args.bound))


# -- monad lab -------------------------------------------------------------------

def cmd_resolve(args: argparse.Namespace) -> Result:
    m = monad_arg(args.monad)
    res = algebras.monad_resolution(m, args.object)
    rep = algebras.check_resolution(res, args.max_dim)
    objs = {str(n): res.ob(n) for n in range(-1, args.max_dim + 1)}
    lines = [f"[{n}] -> {o}" for n, o in objs.items()] + [f"ok: {rep.ok}"] + rep.failures
    return Result(lines, {"objects": objs, "ok": rep.ok, "failures": rep.failures},
                  ok=rep.ok, bounds=_bounds(max_dim=args.max_dim))


def cmd_em(args: argparse.Namespace) -> Result:
    m = monad_arg(args.monad)
    em = algebras.eilenberg_moore(m)
    cons, bad = algebras.conservativity_check(em.ut)
    C = em.category
    lines = [f"algebra {a}" for a in C.objects]
    lines += [f"map {h}" for h in sorted(C.morphisms) if h not in C.identities.values()]
    return Result(lines, {"category": C.to_json(), "conservative": cons}, ok=cons)


def cmd_cones(args: argparse.Namespace) -> Result:
    m = monad_arg(args.monad)
    w = _width(args)
    cs = cones.cone_solver(args.weight, m, args.n, w)
    lines = [f"cones: {len(cs.cones)}", f"truncation: {cs.truncation}", f"stabilized: {cs.stabilized}"]
    lines += [json.dumps(c.to_dict(), ensure_ascii=False, sort_keys=True) for c in cs.cones]
    return Result(lines, cs.to_dict(), ok=cs.stabilized, bounds=_bounds(n=args.n, max_width=w))


def cmd_compare_em(args: argparse.Namespace) -> Result:
    m = monad_arg(args.monad)
    w = _width(args)
    rep = cones.compare_em(m, w, args.max_n)
    lines = [f"n={n}: {a} cones, {b} EM simplices" for n, (a, b) in rep.counts.items()]
    lines += [f"stabilized: {rep.stabilized}", f"ok: {rep.ok}"] + rep.failures
    return Result(lines, rep.to_dict(), ok=rep.ok, bounds=_bounds(max_n=args.max_n, max_width=w))


def _functor_from_json(path: str) -> FinFunctor:
    data = load_json(path)
    src = FinCategory.from_json(data["source"])
    tgt = FinCategory.from_json(data["target"])
    return FinFunctor(src, tgt, data["objMap"], data["morMap"])


def cmd_conservative(args: argparse.Namespace) -> Result:
    if args.functor:
        F = _functor_from_json(args.functor)
    elif args.monad:
        F = algebras.eilenberg_moore(monad_arg(args.monad)).ut
    else:
        raise UsageError("give --functor FILE or --monad NAME|FILE")
    ok, bad = algebras.conservativity_check(F)
    return Result([f"conservative: {ok}"] + [f"witness {m}" for m in bad],
                  {"conservative": ok, "witnesses": bad}, ok=ok)


def cmd_canonical_resolution(args: argparse.Namespace) -> Result:
    m = monad_arg(args.monad)
    rep = algebras.canonical_resolution(m, args.carrier, args.structure, args.max_dim)
    lines = [f"X_{n} = {o}" for n, o in zip(range(-1, args.max_dim + 1), rep.objects)]
    lines += [f"{k} = {v}" for k, v in {**rep.faces, **rep.degeneracies, **rep.extra}.items()]
    lines += [f"ok: {rep.ok}"] + rep.failures
    return Result(lines, rep.to_dict(), ok=rep.ok, bounds=_bounds(max_dim=args.max_dim))


# -- driver ----------------------------------------------------------------------

def _sq(p: argparse.ArgumentParser) -> None:
    p.add_argument("squiggle", help="squiggle literal 'dim:(...)' or a name such as beta")


def _bounded(p: argparse.ArgumentParser, dim: int | None = 3) -> None:
    if dim is not None:
        p.add_argument("--max-dim", type=int, default=dim)
    p.add_argument("--max-width", type=int, default=None,
                   help=f"width bound (default $COHADJ_MAX_WIDTH or {DEFAULT_WIDTH})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cohadj", description="Squiggle calculus and monad laboratory.")
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)
    cmds: dict[str, Callable[[argparse.Namespace], Result]] = {}

    def add(name: str, fn: Callable[[argparse.Namespace], Result], help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        cmds[name] = fn
        return p

    p = add("validate", cmd_validate, "check a squiggle literal")
    p.add_argument("literal")
    p = add("compose", cmd_compose, "horizontal composite, leftmost applied last")
    p.add_argument("squiggles", nargs="+")
    p = add("act", cmd_act, "apply a simplicial operator")
    _sq(p)
    p.add_argument("--op", required=True, help="operator such as '[5->4: 0 0 1 2 3 4]'")
    for name, fn, hlp in (("vertices", cmd_vertices, "vertices and crossing counts"),
                          ("decompose", cmd_decompose, "split into atomic factors"),
                          ("normal-form", cmd_normal_form, "atomic nondegenerate factors with degeneracies"),
                          ("atomic", cmd_atomic, "atomicity, degeneracy and fillability"),
                          ("render", cmd_render, "ASCII picture"),
                          ("hammock", cmd_hammock, "hammock grid"),
                          ("parent", cmd_parent, "fillable and other parent"),
                          ("to-ss", cmd_to_ss, "image in the ordinal-sum presentation")):
        _sq(add(name, fn, hlp))
    p = add("enumerate", cmd_enumerate, "list a bounded hom")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="tgt", required=True)
    _bounded(p, 2)
    p = add("segal", cmd_segal, "exhaustive Segal check")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="tgt", required=True)
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--m", type=int, default=1)
    _bounded(p, None)
    p = add("subcomputad", cmd_subcomputad, "atoms of a generated subcomputad")
    p.add_argument("generators", help="set such as '{alpha,beta}'")
    _bounded(p)
    p = add("parental", cmd_parental, "check that a generated subcomputad is parental")
    p.add_argument("generators")
    _bounded(p)
    p = add("filtrate", cmd_filtrate, "cell filtration between parental subcomputads")
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", dest="tgt", required=True)
    _bounded(p)
    p = add("cell-cert", cmd_cell_cert, "how a fillable arrow attaches to a base")
    _sq(p)
    p.add_argument("--base", required=True)
    _bounded(p)
    p = add("from-ss", cmd_from_ss, "the squiggle with a given ordinal-sum image")
    p.add_argument("--pair", required=True, help="hom pair such as '-,+'")
    p.add_argument("--objects", required=True, help="comma-separated ordinals")
    p.add_argument("--mor", action="append", help="operator, repeat per edge")
    _bounded(p, None)
    p = add("coeq-check", cmd_coeq_check, "truncated coequalizer comparison")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--bound", type=int, default=3)
    monad_help = "built-in name (" + ", ".join(MONADS) + ") or a JSON file"
    p = add("resolve", cmd_resolve, "monad resolution at an object")
    p.add_argument("--monad", required=True, help=monad_help)
    p.add_argument("--object", required=True)
    p.add_argument("--max-dim", type=int, default=3)
    p = add("em", cmd_em, "Eilenberg-Moore category")
    p.add_argument("--monad", required=True, help=monad_help)
    p = add("cones", cmd_cones, "weighted cones over the resolution")
    p.add_argument("--monad", required=True, help=monad_help)
    p.add_argument("--weight", choices=("Wplus", "Wminus"), default="Wminus")
    p.add_argument("--n", type=int, default=0, choices=(0, 1, 2))
    _bounded(p, None)
    p = add("compare-em", cmd_compare_em, "compare cones with Eilenberg-Moore data")
    p.add_argument("--monad", required=True, help=monad_help)
    p.add_argument("--max-n", type=int, default=2, choices=(0, 1, 2))
    _bounded(p, None)
    p = add("conservative", cmd_conservative, "does a functor reflect isomorphisms")
    p.add_argument("--functor", help="JSON file with source, target, objMap, morMap")
    p.add_argument("--monad", help="check u^t of this monad")
    p = add("canonical-resolution", cmd_canonical_resolution, "resolution of an algebra by free ones")
    p.add_argument("--monad", required=True, help=monad_help)
    p.add_argument("--carrier", required=True)
    p.add_argument("--structure", required=True)
    p.add_argument("--max-dim", type=int, default=3)
    parser.set_defaults(_cmds=cmds)
    return parser


def _emit(args: argparse.Namespace, res: Result, out: Any) -> None:
    if args.json:
        doc = {"command": args.command, "ok": res.ok, "bounds": res.bounds, "result": res.payload}
        out.write(json.dumps(doc, ensure_ascii=False, indent=2) + "\n")
        return
    if res.bounds is not None:
        out.write("# bounds: " + " ".join(f"{k}={v}" for k, v in res.bounds.items()) + "\n")
    for line in res.lines:
        out.write(line + "\n")


def run(argv: list[str] | None = None, out: Any = None, err: Any = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        res = args._cmds[args.command](args)
    except LawViolation as exc:
        err.write(f"cohadj {args.command}: law violation: {exc}\n")
        return 1
    except (UsageError, SquiggleSyntaxError, CohadjError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"cohadj {args.command}: {type(exc).__name__}: {msg}\n")
        return 2
    _emit(args, res, out)
    return 0 if res.ok else 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
