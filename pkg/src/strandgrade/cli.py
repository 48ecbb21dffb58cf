"""Command-line front end.

Every subcommand reads one JSON document (a file argument, or stdin when it
is omitted) and writes JSON or text to stdout or ``--out``.  Exit status is
0 on success, 1 for bad input and 2 when a checked property fails.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import io
from .algebra import decompose, diff, enumerate_generators, mul
from .diagrams import closed_index, euler_measure, index, make_generator, point_measure
from .errors import InputError, PropertyViolation, StrandGradeError, SurgeryDisconnected
from .grading import grade, iota_sequence, refined_membership
from .pontryagin import compose_layers, normalize_segments
from .render import to_svg
from .verify import SUITES, Level, run_verify

EXIT_OK, EXIT_INPUT, EXIT_PROPERTY = 0, 1, 2


def _emit(args, payload: dict, text: str | None = None) -> None:
    out = text if args.format == "text" and text is not None else io.dumps(payload)
    if args.out:
        try:
            Path(args.out).write_text(out + "\n", encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    else:
        print(out)


def _pmc(args, required: bool = True):
    if args.pmc is None:
        if required:
            raise InputError("this command needs --pmc <file>")
        return None
    return io.parse_pmc(io.read_json(args.pmc))


def _gen_text(gens) -> str:
    return "\n".join(str(g) for g in gens) if gens else "0"


# subcommands

def cmd_pmc_validate(args) -> int:
    doc = io.read_json(args.input if args.input else args.pmc)
    try:
        pmc = io.parse_pmc(doc)
    except SurgeryDisconnected as exc:
        if args.format == "json":
            print(io.dumps({"valid": False, "circles": exc.circles, "error": str(exc)}))
        raise
    payload = {"valid": True, "circles": 1, "genus": pmc.genus, "points": pmc.num_points}
    _emit(args, payload, f"valid: {pmc.num_points} points, genus {pmc.genus}")
    return EXIT_OK


def cmd_gens(args) -> int:
    pmc = _pmc(args)
    sizes = None if args.size is None else [args.size]
    gens = enumerate_generators(pmc, args.max_chords, sizes)
    payload = {"count": len(gens), "generators": [g.to_json() for g in gens]}
    _emit(args, payload, _gen_text(gens))
    return EXIT_OK


def cmd_mul(args) -> int:
    pmc = _pmc(args)
    doc = io.read_json(args.input)
    left = io.parse_generator(io.require(doc, "left", "input"), pmc)
    right = io.parse_generator(io.require(doc, "right", "input"), pmc)
    terms = decompose(mul(left, right), pmc)
    payload = {"product": [g.to_json() for g in terms]}
    _emit(args, payload, _gen_text(terms))
    return EXIT_OK


def cmd_diff(args) -> int:
    pmc = _pmc(args)
    g = io.parse_generator(io.read_json(args.input), pmc)
    terms = decompose(diff(g), pmc)
    payload = {"differential": [t.to_json() for t in terms]}
    _emit(args, payload, _gen_text(terms))
    return EXIT_OK


def cmd_grade(args) -> int:
    doc = io.read_json(args.input)
    pmc = _pmc(args, required=False)
    membership = None
    if isinstance(doc, dict) and "layers" in doc:
        n = pmc.num_points if pmc else io.as_int(io.require(doc, "points", "layers"), "layers.points")
        gr = compose_layers(io.parse_layers(doc, n))
    elif isinstance(doc, dict) and "ambient" in doc:
        gr = grade(io.parse_strands(doc))
    else:
        if pmc is None:
            raise InputError("grading a generator needs --pmc <file>")
        g = io.parse_generator(doc, pmc)
        gr = grade(g)
        membership = refined_membership(gr, pmc)
    payload = gr.to_json()
    text = f"grading {gr}"
    if membership is not None:
        text += f"\nidempotents s={sorted(membership.s)} t={sorted(membership.t)}"
        if args.membership:
            payload["membership"] = membership.to_json()
    _emit(args, payload, text)
    return EXIT_OK


def cmd_index(args) -> int:
    if args.diagram is None:
        raise InputError("index needs --diagram <file>")
    D = io.parse_diagram(io.read_json(args.diagram), _pmc(args, required=False))
    doc = io.read_json(args.input)
    B = io.parse_domain(doc)
    x = make_generator(D, io.as_int_list(io.require(doc, "x", "input"), "x"))
    y = make_generator(D, io.as_int_list(io.require(doc, "y", "input"), "y"))
    if "rho" in doc:
        if not isinstance(doc["rho"], list):
            raise InputError("rho: expected a list of chord sets")
        rho = [io.parse_chords(r, f"rho[{i}]") for i, r in enumerate(doc["rho"])]
        ind = index(D, B, x, y, rho)
    else:
        rho = []
        ind = closed_index(D, B, x, y)
    payload = {
        "index": ind,
        "euler": str(euler_measure(D, B)),
        "n_x": str(point_measure(D, B, x)),
        "n_y": str(point_measure(D, B, y)),
        "iota2": iota_sequence(rho).twice,
        "length": len(rho),
    }
    _emit(args, payload, f"index {ind}")
    return EXIT_OK


def cmd_normalize(args) -> int:
    segs = io.parse_segments(io.read_json(args.input))
    res = normalize_segments(segs)
    actual = iota_sequence([[s] for s in segs])
    payload = res.to_json()
    payload["iota2"] = actual.twice
    payload["predicted2"] = res.predicted_iota().twice
    text = "\n".join(list(res.steps) + [f"normal form {list(res.segments)}", f"iota {actual}"])
    _emit(args, payload, text)
    if actual != res.predicted_iota():
        print(f"normal form predicts {res.predicted_iota()}, sequence has {actual}", file=sys.stderr)
        return EXIT_PROPERTY
    return EXIT_OK


def cmd_verify(args) -> int:
    pmc = _pmc(args)
    level = Level.parse(args.level)
    suites = args.suite or list(SUITES)
    reports = run_verify(pmc, level, args.seed, suites)
    ok = all(r.ok for r in reports)
    payload = {
        "pmc": pmc.to_json(),
        "level": str(level),
        "seed": args.seed,
        "ok": ok,
        "reports": [r.to_json() for r in reports],
    }
    lines = [
        f"{'PASS' if r.ok else 'FAIL'} {r.suite}: {r.cases} cases, {len(r.failures)} failures, {r.wall_time:.2f}s"
        for r in reports
    ]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_PROPERTY


def cmd_render(args) -> int:
    doc = io.read_json(args.input)
    pmc = _pmc(args, required=False)
    if isinstance(doc, dict) and "layers" in doc:
        n = pmc.num_points if pmc else io.as_int(io.require(doc, "points", "layers"), "layers.points")
        element = io.parse_layers(doc, n)
    elif isinstance(doc, dict) and "ambient" in doc:
        element = io.parse_strands(doc)
    else:
        if pmc is None:
            raise InputError("rendering a generator needs --pmc <file>")
        element = io.parse_generator(doc, pmc)
    svg = to_svg(element)
    if args.out:
        try:
            Path(args.out).write_text(svg, encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {args.out}: {exc.strerror}") from None
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def _seed(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be an integer, got {text!r}") from None
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pmc", help="pointed matched circle JSON file")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--format", choices=("json", "text"), default="json")

    def with_input(p):
        p.add_argument("input", nargs="?", help="input JSON file (default: stdin)")
        return p

    parser = argparse.ArgumentParser(prog="strandgrade", description="Strand algebra and grading engine.")
    sub = parser.add_subparsers(dest="command", required=True)

    pmc = sub.add_parser("pmc", help="pointed matched circles")
    pmc_sub = pmc.add_subparsers(dest="action", required=True)
    with_input(pmc_sub.add_parser("validate", parents=[common], help="check a PMC")).set_defaults(
        func=cmd_pmc_validate
    )

    alg = sub.add_parser("algebra", help="generators, products and differentials")
    alg_sub = alg.add_subparsers(dest="action", required=True)
    p = alg_sub.add_parser("gens", parents=[common], help="list nonzero generators")
    p.add_argument("--max-chords", type=int, default=None)
    p.add_argument("--size", type=int, default=None, help="only idempotents with this many handles")
    p.set_defaults(func=cmd_gens)
    with_input(alg_sub.add_parser("mul", parents=[common], help='multiply {"left":..,"right":..}')).set_defaults(
        func=cmd_mul
    )
    with_input(alg_sub.add_parser("diff", parents=[common], help="differential of a generator")).set_defaults(
        func=cmd_diff
    )

    p = with_input(sub.add_parser("grade", parents=[common], help="grading of a generator, diagram or layers"))
    p.add_argument("--membership", action="store_true", help="include idempotent data for generators")
    p.set_defaults(func=cmd_grade)

    p = with_input(sub.add_parser("index", parents=[common], help="index of a domain"))
    p.add_argument("--diagram", help="bordered diagram JSON file")
    p.set_defaults(func=cmd_index)

    with_input(sub.add_parser("normalize", parents=[common], help="normal form of a segment sequence")).set_defaults(
        func=cmd_normalize
    )

    p = sub.add_parser("verify", parents=[common], help="run the property suites")
    p.add_argument("--level", default="exhaustive", help="exhaustive or sample:<N>")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--suite", action="append", choices=SUITES, help="restrict to a suite (repeatable)")
    p.set_defaults(func=cmd_verify)

    with_input(sub.add_parser("render", parents=[common], help="SVG of a generator or chord layers")).set_defaults(
        func=cmd_render
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PropertyViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PROPERTY
    except StrandGradeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
