"""Command line: check, minimize, gen, export.

Exit codes: 0 ok, 2 bad input (parse, schema, parameters), 3 semantic error,
4 disagreement between minimisation methods.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import io
from .bisim import (characteristic_formulas, encode_ltsA, encode_ltsC,
                    minimal_model, minimize)
from .core import PolyhedralModel
from .errors import (BadParameter, ParseError, RefError, SchemaError,
                     SlcsError)
from .gen import GenSpec, rooms_cube
from .geometry import build_cell_poset, locate_point
from .logic import parse, sat_list, to_text
from .logic.formula import depth

EXIT_OK, EXIT_INPUT, EXIT_SEMANTIC, EXIT_DISAGREE = 0, 2, 3, 4
# the direct route works on element pairs; past this size it takes minutes
DIRECT_LIMIT = 1000


class Disagreement(SlcsError):
    pass


class Run:
    """Collects the RunReport fields while a command executes."""

    def __init__(self, argv):
        self.report = {"command": list(argv), "timings_ms": {}, "result": {}, "outputs": [], "exit_code": 0}
        self._t = time.perf_counter()

    def lap(self, stage):
        now = time.perf_counter()
        self.report["timings_ms"][stage] = round((now - self._t) * 1000, 3)
        self._t = now

    def write(self, path, data: bytes):
        Path(path).write_bytes(data)
        self.report["outputs"].append(str(path))


def _load(path):
    return io.load_model(Path(path).read_bytes())


def _frame(model):
    return build_cell_poset(model) if isinstance(model, PolyhedralModel) else model


def cmd_check(args, run: Run):
    model = _load(args.model)
    run.lap("load")
    if args.formula_file:
        text = Path(args.formula_file).read_text()
    elif args.formula is not None:
        text = args.formula
    else:
        raise BadParameter("give --formula or --formula-file")
    f = parse(text)
    frame = _frame(model)
    run.lap("prepare")
    sat = sat_list(frame, f)
    run.lap("check")
    res = {"formula": to_text(f), "count": len(sat)}
    if args.point:
        if not isinstance(model, PolyhedralModel):
            raise BadParameter("--point needs a polyhedral model")
        x = [float(v) for v in args.point.split(",")]
        loc = locate_point(model, x)
        res.update(point=x, cell=loc.cell, holds=loc.cell in set(sat))
        lines = [f"{loc.cell}: {'true' if res['holds'] else 'false'}"]
    else:
        res["satisfied"] = sat
        lines = [f"{len(sat)} of {len(frame.elements)} elements satisfy {res['formula']}"] + sat
    run.report["result"] = res
    return lines


def cmd_minimize(args, run: Run):
    model = _load(args.model)
    frame = _frame(model)
    run.lap("load")
    methods = ("direct", "ltsC", "ltsA") if args.method == "all" else (args.method,)
    if "direct" in methods and len(frame.elements) > DIRECT_LIMIT and not args.force:
        raise BadParameter(f"the direct method is limited to {DIRECT_LIMIT} elements "
                           f"(model has {len(frame.elements)}); use ltsC/ltsA or --force")
    parts = {}
    for m in methods:
        parts[m] = minimize(frame, m)
        run.lap(m)
    first = parts[methods[0]]
    agree = all(p.as_sets() == first.as_sets() for p in parts.values())
    run.report["result"] = {"blocks": len(first), "methods": list(methods), "agree": agree,
                            "partition": first.to_dict()}
    if not agree:
        sizes = ", ".join(f"{m}={len(p)}" for m, p in parts.items())
        raise Disagreement(f"methods disagree: {sizes}")
    out = Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
        run.write(out / "partition.json", first.to_json().encode())
        run.write(out / "minimal.json", io.save_model(minimal_model(frame, first)))
        if args.chi:
            table = characteristic_formulas(frame, first)
            doc = {name: {"members": list(b), "conjuncts": len(table.conjuncts[i]),
                          "modal_depth": depth(table.chi[i])}
                   for i, (name, b) in enumerate(zip(first.names(), first.blocks))}
            run.write(out / "chi.json", (json.dumps(doc, indent=1) + "\n").encode())
        if args.aut:
            lts = encode_ltsC(frame) if args.variant == "C" else encode_ltsA(frame)[0]
            run.write(out / f"lts{args.variant}.aut", io.export_aut(lts))
    run.lap("write")
    lines = [f"{len(first)} blocks ({', '.join(methods)}{'; all agree' if len(methods) > 1 else ''})"]
    for name, b in zip(first.names(), first.blocks):
        lines.append(f"{name} ({len(b)}): {' '.join(b[:12])}{' ...' if len(b) > 12 else ''}")
    return lines


def cmd_gen(args, run: Run):
    kind = args.kind
    if kind in ("rooms", "rooms_cube"):
        rc = rooms_cube(args.n)
        model = rc.model
        run.report["result"] = rc.report()
    else:
        model = GenSpec(kind, n=args.n, seed=args.seed, elements=args.elements,
                        letters=args.letters, density=args.density).build()
        run.report["result"] = {"elements": len(model.complex.simplexes) if isinstance(model, PolyhedralModel)
                                else len(model.elements)}
    run.lap("generate")
    data = io.save_model(model)
    if args.out:
        run.write(args.out, data)
    else:
        sys.stdout.write(data.decode())
    return [json.dumps(run.report["result"], sort_keys=True)] if args.out else []


def cmd_export(args, run: Run):
    model = _load(args.model)
    frame = _frame(model)
    run.lap("load")
    if args.aut:
        lts = encode_ltsC(frame) if args.variant == "C" else encode_ltsA(frame)[0]
        data = io.export_aut(lts)
    elif args.dot:
        data = io.export_dot(frame)
    elif args.coloring:
        if not isinstance(model, PolyhedralModel):
            raise BadParameter("--coloring needs a polyhedral model")
        if args.formula:
            data = io.export_coloring(model, sat_list(frame, parse(args.formula)))
        else:
            data = io.export_coloring(model, minimize(frame, args.method))
    else:
        raise BadParameter("choose one of --aut, --dot, --coloring")
    run.lap("export")
    if args.out:
        run.write(args.out, data)
        return [f"wrote {args.out} ({len(data)} bytes)"]
    sys.stdout.write(data.decode())
    return []


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyslcs", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="print a JSON run report")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="satisfaction set of a formula")
    p.add_argument("-m", "--model", required=True)
    p.add_argument("-f", "--formula")
    p.add_argument("--formula-file")
    p.add_argument("--point", help="comma separated coordinates")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("minimize", help="weak pm-bisimilarity classes and minimal model")
    p.add_argument("-m", "--model", required=True)
    p.add_argument("--method", choices=["direct", "ltsC", "ltsA", "all"], default="ltsA")
    p.add_argument("-o", "--out", help="output directory")
    p.add_argument("--chi", action="store_true", help="also synthesise characteristic formulas")
    p.add_argument("--aut", action="store_true", help="also write the intermediate LTS")
    p.add_argument("--variant", choices=["A", "C"], default="C")
    p.add_argument("--force", action="store_true", help="run the direct method on large models")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("gen", help="generate a model")
    p.add_argument("kind", choices=["triangle", "figure1", "rooms", "rooms_cube", "random"])
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--elements", type=int, default=8)
    p.add_argument("--letters", type=int, default=2)
    p.add_argument("--density", type=float, default=0.3)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("export", help="export .aut, DOT or colouring")
    p.add_argument("-m", "--model", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--aut", action="store_true")
    g.add_argument("--dot", action="store_true")
    g.add_argument("--coloring", action="store_true")
    p.add_argument("--variant", choices=["A", "C"], default="C")
    p.add_argument("-f", "--formula", help="colour by satisfaction instead of by class")
    p.add_argument("--method", choices=["direct", "ltsC", "ltsA"], default="ltsA")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_export)
    return ap


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(argv)
    run = Run(argv)
    lines = []
    try:
        lines = args.func(args, run)
    except (ParseError, SchemaError, RefError, BadParameter) as e:
        code, msg = EXIT_INPUT, str(e)
    except Disagreement as e:
        code, msg = EXIT_DISAGREE, str(e)
    except SlcsError as e:
        code, msg = EXIT_SEMANTIC, str(e)
    except (OSError, ValueError) as e:
        code, msg = EXIT_INPUT, str(e)
    else:
        code, msg = EXIT_OK, None
    run.report["exit_code"] = code
    if msg:
        run.report["error"] = msg
    if args.json:
        print(json.dumps(run.report, indent=1))
    else:
        for line in lines or []:
            print(line)
        if msg:
            print(f"error: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
