"""``snortcgt`` command line.

Exit codes: 0 ok, 1 internal error, 2 bad input, 3 verification failure
(including a conjecture violation).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import traceback
from pathlib import Path

from snortcgt.families import format_report, report_json, verify_family
from snortcgt.graphio import PositionFormatError, load_position
from snortcgt.notation import ParseError, format_game, parse_game
from snortcgt.search import (
    ConfigError,
    SearchConfig,
    check_conjecture,
    default_seeds,
    evolve,
    format_conjecture,
    load_hall_of_fame,
)
from snortcgt.snort import value
from snortcgt.thermography import game_thermograph, svg, temperature

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3

CLI_FAMILIES = ("star", "tinted-star", "joined-stars", "caterpillar")


class InputError(Exception):
    pass


def _load(path: str):
    try:
        return load_position(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except PositionFormatError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, indent=2)


def cmd_eval(args) -> int:
    p = _load(args.file)
    g = value(p)
    text = format_game(g)
    if args.json:
        out = {"value": text}
        if args.temperature:
            out["temperature"] = str(temperature(g))
        print(_dump(out))
    else:
        print(text)
        if args.temperature:
            print(f"t = {temperature(g)}")
    return EXIT_OK


def cmd_temp(args) -> int:
    p = _load(args.file)
    t = temperature(value(p))
    print(_dump({"temperature": str(t)}) if args.json else str(t))
    return EXIT_OK


def cmd_thermo(args) -> int:
    if (args.file is None) == (args.game is None):
        raise InputError("give exactly one of FILE or --game")
    if args.game is not None:
        try:
            g = parse_game(args.game)
        except ParseError as exc:
            raise InputError(str(exc)) from exc
    else:
        g = value(_load(args.file))
    th = game_thermograph(g)
    if args.svg:
        Path(args.svg).write_text(svg(th))
    if args.json or not args.svg:
        print(th.to_json(indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.n_max < 1:
        raise InputError("--n-max must be >= 1")
    rows = verify_family(args.family, range(1, args.n_max + 1))
    print(report_json(rows) if args.json else format_report(rows))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_VERIFY


def _read_config(path):
    if path is None:
        return SearchConfig()
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    return SearchConfig.from_dict(raw)


def cmd_search(args) -> int:
    cfg = _read_config(args.config)
    if args.seed is not None:
        cfg.rng_seed = args.seed
    if args.generations is not None:
        cfg.generations = args.generations
    resume = None
    if args.resume:
        try:
            resume = load_hall_of_fame(args.resume)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot load {args.resume}: {exc}") from exc
    seeds = [_load(f) for f in args.seeds] if args.seeds else default_seeds()

    def progress(gen, hall):
        if args.verbose:
            print(f"generation {gen}: best {hall.best.evaluation.fitness}", file=sys.stderr)

    hall = evolve(cfg, seeds, resume=resume, progress=progress)
    text = hall.to_json()
    if args.out:
        Path(args.out).write_text(text + "\n")
        best = hall.best
        print(f"best fitness {best.evaluation.fitness} "
              f"(t = {best.evaluation.temperature}, deg = {best.evaluation.degree}); wrote {args.out}")
    else:
        print(text)
    return EXIT_OK


def cmd_conjecture(args) -> int:
    positions = [_load(f) for f in args.files]
    rows = check_conjecture(positions, args.files)
    if args.json:
        print(_dump({"rows": [r.to_dict() for r in rows], "all_hold": all(r.holds for r in rows)}))
    else:
        print(format_conjecture(rows))
    if not all(r.holds for r in rows):
        print("CONJECTURE VIOLATION FOUND", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _u64(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="snortcgt", description="Exact Snort values and thermographs.")
    ap.add_argument("--log-level", default="WARNING")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="canonical value of a position")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--temperature", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("temp", help="temperature of a position")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_temp)

    p = sub.add_parser("thermo", help="thermograph of a position or game literal")
    p.add_argument("file", nargs="?")
    p.add_argument("--game")
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg", metavar="OUT")
    p.set_defaults(func=cmd_thermo)

    p = sub.add_parser("verify", help="check a family against its closed form")
    p.add_argument("--family", choices=CLI_FAMILIES, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="genetic search for large t - deg")
    p.add_argument("--config")
    p.add_argument("--resume")
    p.add_argument("--seed", type=_u64)
    p.add_argument("--generations", type=int)
    p.add_argument("--out")
    p.add_argument("--seeds", nargs="+", metavar="FILE")
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("conjecture", help="check t <= deg + deg2/2")
    p.add_argument("files", nargs="+")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_conjecture)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    logging.basicConfig(level=getattr(logging, str(args.log_level).upper(), logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except KeyboardInterrupt:
        return EXIT_INTERNAL
    except Exception:
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
