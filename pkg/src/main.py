import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from src.thompson.core import Runner
from src.thompson.errors import OracleMismatchError, ParseError, ThompsonError
from src.thompson.models import FORMATS_BY_COMMAND, RunConfig
from src.thompson.parsers import NotationParser
from src.thompson.utils import load_environment, setup_logging

logger = logging.getLogger("src.thompson")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m src.main",
        description="Thompson permutations, closure links and class statistics of positive elements of F3.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="INFO logging (twice: DEBUG)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        choices = [fmt.value for fmt in FORMATS_BY_COMMAND[name]]
        sub.add_argument("--format", choices=choices, default=None, help=f"output format (default {choices[0]})")
        sub.add_argument("--out", default=None, help="output file (stats: directory); stdout when omitted")
        return sub

    def add_grid(sub: argparse.ArgumentParser, ranged: bool = True):
        sub.add_argument("-w", "--width", type=int, required=True)
        sub.add_argument("-H", "--height", required=True, help="H or LOW..HIGH" if ranged else "H")

    def add_word(sub: argparse.ArgumentParser):
        sub.add_argument("word", nargs="?", default=None, help="comma-separated exponents, e.g. 1,0,2")
        sub.add_argument("--word", dest="word_option", default=None)

    perm = add("perm", "Thompson permutation and orbit count of a positive word")
    add_word(perm)

    stats = add("stats", "class histograms over width/height grids")
    add_grid(stats)
    stats.add_argument("--jobs", type=int, default=None)

    verify = add("verify", "compare orbit counts with traced closure components")
    add_grid(verify)

    export = add("export", "PD or Gauss code of the closure of a positive word")
    add_word(export)
    export.add_argument("--crossing-convention", choices=["lr-over", "mp-over"], default=None)

    sample = add("random", "seeded random positive words and their orbit counts")
    add_grid(sample, ranged=False)
    sample.add_argument("--count", type=int, required=True)
    sample.add_argument("--seed", type=int, default=None)

    conjectures = add("conjectures", "check the conjectured class statistics")
    add_grid(conjectures)
    conjectures.add_argument("--jobs", type=int, default=None)

    return parser


def to_config(args: argparse.Namespace, env: dict) -> RunConfig:
    notation = NotationParser()
    values = {"command": args.command, "format": args.format, "out": args.out}
    word = getattr(args, "word_option", None) or getattr(args, "word", None)
    if args.command in ("perm", "export"):
        values["word"] = list(notation.parse_word(word or "").exponents)
    if getattr(args, "width", None) is not None:
        values["width"] = args.width
    if getattr(args, "height", None) is not None:
        values["heights"] = notation.parse_heights(args.height)
    if hasattr(args, "jobs"):
        values["jobs"] = args.jobs if args.jobs is not None else env["jobs"]
    if hasattr(args, "count"):
        values["count"] = args.count
        values["seed"] = args.seed if args.seed is not None else env["seed"]
    if hasattr(args, "crossing_convention"):
        values["convention"] = args.crossing_convention or env["convention"]
    return RunConfig(**values)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        env = load_environment()
    except ValueError as e:
        print(f"error: invalid environment setting: {e}", file=sys.stderr)
        return EXIT_USAGE

    level = getattr(logging, env["log_level"])
    if args.verbose:
        level = min(level, logging.INFO if args.verbose == 1 else logging.DEBUG)
    setup_logging("src.thompson", env["log_file"], level)

    try:
        config = to_config(args, env)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        output = Runner().run(config)
    except OracleMismatchError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as e:
        print(f"error: cannot write output: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except ThompsonError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE

    if output:
        sys.stdout.write(output)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
