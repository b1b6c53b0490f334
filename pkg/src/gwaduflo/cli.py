"""Command line interface: ``gwaduflo <command> <config> [options]``.

Exit codes: 0 success, 1 usage or input error, 2 computation too large.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import __version__
from .algebra import GwaSpec, verify_relations
from .config import ConfigError, GwaConfig, load_config
from .exactnum import GaussianRational, format_gauss, parse_gauss
from .geometry import (ClosedSet, SupportRect, as_point, break_positions,
                       support_of_simple, support_of_verma, zariski_closure)
from .ideals import (PrimitiveIdeal, annihilator_of_simple, check_conditions,
                     duflo_refine, enumerate_primitive_ideals)
from .modules import (SizeError, WindowOverflow, enumerate_submodules,
                      has_highest_weight_generator, is_highest_weight_module,
                      joint_kernel_dimension, realize_window)

COMMANDS = ("info", "breaks", "support", "submodules", "closure", "annihilator",
            "primitive-ideals", "duflo", "window", "check")
NEEDS_POINT = {"breaks", "support", "submodules", "closure", "annihilator", "duflo", "window"}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# JSON-ready encodings

def _end(k, sign):
    return sign + "inf" if k is None else k


def enc_point(p) -> list:
    return [format_gauss(x) for x in p]


def enc_weight(p):
    return format_gauss(p[0]) if len(p) == 1 else enc_point(p)


def enc_rect(s: SupportRect) -> dict:
    intervals = []
    for i in range(s.n):
        lo, hi = s.lo[i], s.hi[i]
        intervals.append({
            "direction": i + 1,
            "lo": _end(lo, "-"),
            "hi": _end(hi, "+"),
            "lo_weight": None if lo is None else format_gauss(s.base[i] + lo * s.step[i]),
            "hi_weight": None if hi is None else format_gauss(s.base[i] + hi * s.step[i]),
        })
    finite = s.is_finite()
    return {
        "base": enc_point(s.base),
        "intervals": intervals,
        "finite": finite,
        "weights": [enc_weight(w) for w in s.weights()] if finite else None,
    }


def enc_closed(c: ClosedSet) -> list:
    return ["full" if v is None else [format_gauss(x) for x in v] for v in c.coords]


def enc_ideal(I: PrimitiveIdeal) -> dict:
    return {
        "zero": I.is_zero,
        "closure": enc_closed(I.closure),
        "generators": [{"direction": g.var + 1,
                        "roots": [format_gauss(z) for z in g.roots],
                        "polynomial": g.format("T" if I.closure.n == 1 else None)}
                       for g in I.generators],
        "display": I.describe(),
    }


def enc_spec(cfg: GwaConfig) -> dict:
    s = cfg.spec
    return {
        "name": cfg.name,
        "n": s.n,
        "b": enc_point(s.b),
        "t": [[format_gauss(z) for z in ti.roots] for ti in s.t],
    }


# ---------------------------------------------------------------------------
# commands

def cmd_info(cfg, args):
    spec = cfg.spec
    return {
        "description": cfg.description,
        "polynomials": [{"direction": i + 1, "roots": [format_gauss(z) for z in t.roots],
                         "polynomial": t.format("T" if spec.n == 1 else None)}
                        for i, t in enumerate(spec.t)],
        "length_bound": spec.length_bound(),
        "relations": [{"name": r.name, "passed": r.passed} for r in verify_relations(spec)],
    }


def cmd_breaks(cfg, args):
    spec, a = cfg.spec, args.point
    br = break_positions(spec, a)
    out = []
    for i in range(spec.n):
        out.append({
            "direction": i + 1,
            "offsets": list(br.offsets[i]),
            "weights": [format_gauss(a[i] + k * spec.b[i]) for k in br.offsets[i]],
            "k_low": _end(br.k_low(i), "-"),
            "k_up": _end(br.k_up(i), "+"),
        })
    return {"point": enc_point(a), "breaks": out}


def cmd_support(cfg, args):
    spec, a = cfg.spec, args.point
    rect = support_of_simple(spec, a) if args.module == "L" else support_of_verma(spec, a)
    return {"point": enc_point(a), "module": args.module, **enc_rect(rect)}


def cmd_submodules(cfg, args):
    spec, a = cfg.spec, args.point
    lat = enumerate_submodules(spec, a)
    dec = lat.decomposition
    index = {c: j for j, c in enumerate(dec.cells)}
    cell_docs = []
    for c in dec.cells:
        rect = dec.rect(a, spec.b, c)
        cell_docs.append({
            "index": index[c],
            "intervals": [{"lo": _end(rect.lo[i], "-"), "hi": _end(rect.hi[i], "+")}
                          for i in range(spec.n)],
            "contains_point": c == dec.center,
        })
    return {
        "point": enc_point(a),
        "length": lat.length,
        "cells": cell_docs,
        "submodule_count": len(lat),
        "submodules": [sorted(index[c] for c in s) for s in lat.submodules],
        "covers": [list(p) for p in lat.covers()],
    }


def cmd_closure(cfg, args):
    spec, a = cfg.spec, args.point
    rect = support_of_simple(spec, a)
    return {"point": enc_point(a), "support": enc_rect(rect),
            "closure": enc_closed(zariski_closure(spec, rect))}


def cmd_annihilator(cfg, args):
    spec, a = cfg.spec, args.point
    return {"point": enc_point(a), "ideal": enc_ideal(annihilator_of_simple(spec, a))}


def cmd_primitive_ideals(cfg, args):
    ideals = enumerate_primitive_ideals(cfg.spec)
    return {"count": len(ideals), "ideals": [enc_ideal(I) for I in ideals]}


def cmd_duflo(cfg, args):
    spec, a = cfg.spec, args.point
    m = duflo_refine(spec, a)
    before = annihilator_of_simple(spec, a)
    after = annihilator_of_simple(spec, m)
    return {
        "point": enc_point(a),
        "refined_point": enc_point(m),
        "highest_weight_generator": has_highest_weight_generator(spec, m),
        "input_is_highest_weight_module": is_highest_weight_module(spec, a),
        "same_annihilator": before == after,
        "ideal": enc_ideal(after),
        "refined_support": enc_rect(support_of_simple(spec, m)),
    }


def cmd_window(cfg, args):
    spec, a = cfg.spec, args.point
    variant = "simple" if args.module == "L" else "verma"
    w = realize_window(spec, a, args.box, variant)
    actions = []
    for alpha in w.basis:
        for i in range(spec.n):
            for raising, g in ((True, "X"), (False, "Y")):
                target = list(alpha)
                target[i] += 1 if raising else -1
                if not w.in_box(target) or not w.in_module(target):
                    continue
                actions.append({"offset": list(alpha), "generator": f"{g}{i + 1}",
                                "target": target,
                                "coefficient": format_gauss(w.coefficient(alpha, i, raising))})
    dim, free = joint_kernel_dimension(w, [(i, True) for i in range(spec.n)])
    return {
        "point": enc_point(a),
        "module": args.module,
        "box": [list(r) for r in w.box],
        "basis": [{"offset": list(alpha), "weight": enc_point(w.weight(alpha))} for alpha in w.basis],
        "actions": actions,
        "raising_kernel": {"dimension": dim, "offsets": [list(x) for x in free]},
    }


def cmd_check(cfg, args):
    checks = check_conditions(cfg.spec, args.samples, args.seed)
    return {
        "samples": args.samples,
        "seed": args.seed,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail,
                    "witness": c.witness} for c in checks],
        "all_passed": all(c.passed for c in checks),
    }


HANDLERS = {
    "info": cmd_info, "breaks": cmd_breaks, "support": cmd_support,
    "submodules": cmd_submodules, "closure": cmd_closure, "annihilator": cmd_annihilator,
    "primitive-ideals": cmd_primitive_ideals, "duflo": cmd_duflo, "window": cmd_window,
    "check": cmd_check,
}


# ---------------------------------------------------------------------------
# rendering

def to_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False)


def _text_lines(value, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return lines
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                sub = _text_lines(item, indent + 1)
                lines.append(f"{pad}-")
                lines.extend(sub)
            else:
                lines.append(f"{pad}- {_scalar(item)}")
        return lines
    return [pad + _scalar(value)]


def _is_flat(v) -> bool:
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _is_flat(x)) for x in v)
    return False


def _scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    return str(v)


def to_text(doc: dict) -> str:
    return "\n".join(_text_lines(doc))


@dataclass
class OutputDocument:
    data: dict
    format: str = "text"

    def render(self) -> str:
        return to_json(self.data) if self.format == "json" else to_text(self.data)


# ---------------------------------------------------------------------------
# argument handling

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_point(text: str, spec: GwaSpec) -> tuple:
    try:
        return as_point(spec, [parse_gauss(x) for x in text.split(",")])
    except ValueError as e:
        raise UsageError(f"bad --point {text!r}: {e}") from None


def parse_box(text: str, spec: GwaSpec):
    try:
        box = []
        for part in text.split(","):
            lo, hi = part.split(":")
            box.append((int(lo), int(hi)))
    except ValueError:
        raise UsageError(f"bad --box {text!r}: expected lo:hi per direction, comma separated") from None
    if len(box) != spec.n or any(lo > hi for lo, hi in box):
        raise UsageError(f"--box needs {spec.n} nonempty ranges")
    return tuple(box)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gwaduflo", description="Primitive ideals of generalized Weyl algebras.")
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("config", help="config file, or the name of a bundled config")
    p.add_argument("--point", help="weight as comma-separated number literals, e.g. 3+1i or 0,9/2")
    p.add_argument("--module", choices=("M", "L"), default="L")
    p.add_argument("--box", help="window box, lo:hi per direction, comma separated")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    return p


def _attach_values(argv: Sequence[str]) -> List[str]:
    """Glue ``--point -2,0`` into ``--point=-2,0`` so argparse does not read a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--point", "--box"):
            nxt = next(it, None)
            if nxt is not None and nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def run_command(argv: Sequence[str]):
    """Return ``(exit_code, OutputDocument or None)``; diagnostics go to stderr."""
    try:
        args = build_parser().parse_args(_attach_values(argv))
        cfg = load_config(args.config)
        if args.command in NEEDS_POINT:
            if args.point is None:
                raise UsageError(f"{args.command} needs --point")
            args.point = parse_point(args.point, cfg.spec)
        if args.box is not None:
            args.box = parse_box(args.box, cfg.spec)
        if args.command == "check" and args.samples < 1:
            raise UsageError("--samples must be at least 1")
        result = HANDLERS[args.command](cfg, args)
    except (UsageError, ConfigError, FileNotFoundError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1, None
    except SizeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2, None
    except WindowOverflow as e:
        print(f"error: {e}; enlarge --box", file=sys.stderr)
        return 1, None
    doc = {"command": args.command, "config": enc_spec(cfg), "result": result}
    return 0, OutputDocument(doc, args.format)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        code, out = run_command(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    if out is not None:
        print(out.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
