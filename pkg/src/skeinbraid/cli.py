"""Command line front end.

    skeinbraid trace "t1 s1" --strands 2
    skeinbraid invariant "t1 s1"
    skeinbraid reduce "t s1 t s1"
    skeinbraid cmp "s2 s2" "s1 s3"
    skeinbraid system --level 1 --max-strands 0 --max-exp 1
    skeinbraid solve --level 2 --max-strands 0 --max-exp 2 --format json

Exit codes: 0 on success, 1 on input errors, 2 when the step budget runs out.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Callable, NoReturn, Sequence, TextIO

from . import __version__
from .braidword import MixedBraidWord, parse
from .budget import StepBudget
from .config import ArgParseWrapper, RunConfig
from .config.providers import DefaultedValue
from .elimination import eliminate
from .errors import BudgetExhaustedError, ConfigurationError, SkeinError
from .hecke import to_algebra
from .skein import build_system, cmp_s
from .trace import SMonomial, invariant_X, trace_word

_logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2

_Payload = tuple[str, Any]


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text", help="Output format (default: %(default)s)")
    common.add_argument("--budget", type=int, default=None, help="Rewriting step budget (env: SKEIN_BUDGET)")
    common.add_argument("--config", default=None, help="YAML file with run settings")
    common.add_argument("--log-level", dest="log_level", default=None, help="Logging level (default: WARNING)")

    braid = _Parser(add_help=False)
    braid.add_argument("word", help='Braid word, e.g. "t1 s1^-1 t1\'^2"; "" is the identity')
    braid.add_argument("--strands", type=int, default=None, help="Number of moving strands")

    bounds = _Parser(add_help=False)
    bounds.add_argument("--level", type=int, default=1, help="Level k (default: %(default)s)")
    bounds.add_argument("--max-strands", dest="max_strands", type=int, default=1, help="Highest loop index M (default: %(default)s)")
    bounds.add_argument("--max-exp", dest="max_exp", type=int, default=2, help="Largest |exponent| E (default: %(default)s)")
    bounds.add_argument("--sign", choices=("+", "-", "both"), default="both", help="Band move signs (default: %(default)s)")
    bounds.add_argument("--allow-large-bounds", dest="allow_large_bounds", action="store_true", help="Lift the M <= 6, E <= 8 guardrail")

    parser = _Parser(prog="skeinbraid", description="Exact HOMFLYPT skein computations in S1 x S2")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    sub.add_parser("trace", parents=[common, braid], help="Markov trace of a braid word")
    sub.add_parser("invariant", parents=[common, braid], help="The invariant X of a braid word")
    sub.add_parser("reduce", parents=[common, braid], help="Normal form in the Hecke algebra")
    cmp_parser = sub.add_parser("cmp", parents=[common], help="Compare two s-monomials")
    cmp_parser.add_argument("monomials", nargs=2, metavar="MONOMIAL", help='e.g. "s-5 s1 s1 s3"')
    sub.add_parser("system", parents=[common, bounds], help="Level system of band move equations")
    sub.add_parser("solve", parents=[common, bounds], help="Eliminate a level system")
    return parser


# --- commands ---


def _word(cfg: RunConfig) -> MixedBraidWord:
    return parse(cfg.word or "", cfg.strands)


def _cmd_trace(cfg: RunConfig) -> _Payload:
    wd = _word(cfg)
    value = trace_word(wd)
    return value.render(), {"word": wd.render(), "strands": wd.n, "trace": value.to_json()}


def _cmd_invariant(cfg: RunConfig) -> _Payload:
    wd = _word(cfg)
    value = invariant_X(wd)
    return value.render(), {"word": wd.render(), "strands": wd.n, "invariant": value.to_json()}


def _cmd_reduce(cfg: RunConfig) -> _Payload:
    wd = _word(cfg)
    x = to_algebra(wd)
    terms = [{"word": w.render(), "coeff": c.to_json()} for w, c in x.items()]
    return x.render(), {"word": wd.render(), "strands": wd.n, "terms": terms}


def _cmd_cmp(cfg: RunConfig) -> _Payload:
    left, right = (SMonomial.parse(text) for text in (cfg.monomials or []))
    symbol = {-1: "<", 0: "=", 1: ">"}[cmp_s(left, right)]
    return symbol, {"left": left.to_json(), "right": right.to_json(), "order": symbol}


def _cmd_system(cfg: RunConfig) -> _Payload:
    system = build_system(cfg.level, cfg.max_strands, cfg.max_exp, cfg.signs)
    return system.render(), system.to_json()


def _cmd_solve(cfg: RunConfig) -> _Payload:
    solved = eliminate(build_system(cfg.level, cfg.max_strands, cfg.max_exp, cfg.signs))
    return solved.render(), solved.to_json()


_COMMANDS: dict[str, Callable[[RunConfig], _Payload]] = {
    "trace": _cmd_trace,
    "invariant": _cmd_invariant,
    "reduce": _cmd_reduce,
    "cmp": _cmd_cmp,
    "system": _cmd_system,
    "solve": _cmd_solve,
}


def run(cfg: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        cfg.validate()
        with StepBudget(cfg.budget) as budget:
            text, data = _COMMANDS[cfg.command](cfg)
        _logger.info(
            "%s finished after %d steps, %d left", cfg.command, budget.used, budget.remaining
        )
    except BudgetExhaustedError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_BUDGET
    except (SkeinError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT

    if cfg.output_format == "json":
        print(json.dumps(data, indent=2), file=out)
    else:
        print(text, file=out)
    return EXIT_OK


def _configure_logging(level: str) -> None:
    numeric = logging.getLevelName(level.upper())
    if not isinstance(numeric, int):
        raise ConfigurationError("log_level", level, "unknown logging level")
    logging.basicConfig(level=numeric, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ArgParseWrapper.wrap(parser)
    args = parser.parse_args(argv)

    config_path = args.config.value if isinstance(args.config, DefaultedValue) else args.config
    try:
        cfg = RunConfig(config_path=config_path, args=args)
        _configure_logging(cfg.log_level)
    except SkeinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return run(cfg)
