"""
Command-line front end.

    python -m src.cli <verb> [options]

Results go to stdout as text or, with --json, as one JSON document; logs
go to stderr. Exit status: 0 on success or a passing check, 1 on a check
that fails or stays undecided, 2 on usage and input errors, 3 when a
resource guard (bit cap, range limit) trips.
"""

import argparse
import json
import logging
import sys
from typing import Any, Callable, Optional

from src.cli.set_literal import parse_code, parse_set_literal
from src.config.settings import settings
from src.domain.models.exceptions import DomainException, ResourceGuardException, describe
from src.domain.models.report import CheckReport
from src.domain.models.signature import SIGNATURES, get_signature, is_arithmetic
from src.domain.services import hf_core
from src.domain.services.axiom_checker import AXIOMS, check_axiom
from src.domain.services.formula_service import FormulaService
from src.domain.services.roundtrip import ROUNDTRIP_KINDS, roundtrip_check
from src.domain.services.stages import check_stage_props, stage
from src.domain.services.verification_service import VerificationService
from src.infrastructure.repositories.json_formula_corpus_repository import (
    JsonFormulaCorpusRepository,
)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

INTERPRETATIONS = ("a", "o", "b", "identity")

OPERATIONS = hf_core.CODE_OPERATIONS


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise _UsageError(message)


def _parse_args(argv: Optional[list[str]] = None) -> argparse.Namespace:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit JSON on stdout")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG level")

    parser = _ArgumentParser(prog="hfkit", description="Hereditarily finite sets and arithmetic")
    verbs = parser.add_subparsers(dest="verb", required=True)

    encode = verbs.add_parser("encode", parents=[common], help="Code of a brace literal")
    encode.add_argument("literal")

    decode = verbs.add_parser("decode", parents=[common], help="Brace literal of a code")
    decode.add_argument("code")

    operation = verbs.add_parser("op", parents=[common], help="Apply a set operation to codes")
    operation.add_argument("name", choices=sorted(OPERATIONS))
    operation.add_argument("args", nargs="*")

    translate_cmd = verbs.add_parser("translate", parents=[common], help="Translate a formula")
    translate_cmd.add_argument("formula")
    translate_cmd.add_argument("--interp", choices=INTERPRETATIONS, required=True)
    translate_cmd.add_argument("--compose", action="append", choices=INTERPRETATIONS, default=[],
                               help="Inner interpretation applied first (repeatable)")
    translate_cmd.add_argument("--sig", choices=sorted(SIGNATURES),
                               help="Signature of identity interpretations")
    translate_cmd.add_argument("--abbrev", action="store_true", help="Print templates by name")

    classify_cmd = verbs.add_parser("classify", parents=[common], help="E/U levels of a formula")
    classify_cmd.add_argument("formula")
    classify_cmd.add_argument("--sig", choices=sorted(SIGNATURES), default="set")

    evaluate = verbs.add_parser("eval", parents=[common], help="Evaluate a formula")
    evaluate.add_argument("formula")
    evaluate.add_argument("--sig", choices=sorted(SIGNATURES), default="set")
    evaluate.add_argument("--var", action="append", default=[], metavar="NAME=VALUE")
    evaluate.add_argument("--budget", type=int, default=None)
    evaluate.add_argument("--oracle", choices=("on", "off"), default="off")
    evaluate.add_argument("--closed", action="store_true",
                          help="Values below the budget are the whole domain")

    stage_cmd = verbs.add_parser("stage", parents=[common], help="Check the stage D_n")
    stage_cmd.add_argument("--n", type=int, required=True)

    axiom = verbs.add_parser("axiom-check", parents=[common], help="Check an axiom on D_n")
    axiom.add_argument("axiom", choices=AXIOMS)
    axiom.add_argument("--n", type=int, required=True)
    axiom.add_argument("--bump", type=int, default=0)
    axiom.add_argument("--seed", type=int, default=None)

    roundtrip = verbs.add_parser("roundtrip", parents=[common], help="Round-trip identity check")
    roundtrip.add_argument("kind", choices=ROUNDTRIP_KINDS)
    roundtrip.add_argument("--range", type=int, default=None, dest="range_")

    selftest = verbs.add_parser("selftest", parents=[common], help="Run the acceptance suite")
    selftest.add_argument("--quick", action="store_true", help="Reduced ranges")
    selftest.add_argument("--seed", type=int, default=None)

    return parser.parse_args(argv)


# ==================== Output ====================


def _emit(args: argparse.Namespace, text: str, data: dict[str, Any]) -> None:
    if args.json:
        print(json.dumps(data, default=str))
    else:
        print(text)


def _emit_report(args: argparse.Namespace, report: CheckReport) -> int:
    line = f"{report.subject}: {report.result} ({report.cases} cases)"
    if report.counterexample is not None:
        line += f"\ncounterexample: {report.counterexample}"
    for note in report.notes:
        line += f"\nnote: {note}"
    _emit(args, line, report.to_json())
    return EXIT_OK if report.passed else EXIT_FAILED


# ==================== Verbs ====================


def _encode(args: argparse.Namespace) -> int:
    code = hf_core.encode(parse_set_literal(args.literal))
    _emit(args, str(code), {"code": code})
    return EXIT_OK


def _decode(args: argparse.Namespace) -> int:
    code = parse_code(args.code)
    text = str(hf_core.decode(code))
    _emit(args, text, {"code": code, "set": text})
    return EXIT_OK


def _operation(args: argparse.Namespace) -> int:
    arity, function = OPERATIONS[args.name]
    if len(args.args) != arity:
        raise _UsageError(f"{args.name} takes {arity} argument(s), got {len(args.args)}")
    values = [parse_code(a) for a in args.args]
    result = function(*values)
    _emit(args, "none" if result is None else str(result).lower(),
          {"op": args.name, "args": values, "result": result})
    return EXIT_OK


def _translate(args: argparse.Namespace) -> int:
    translation = FormulaService().translate_text(
        args.formula, args.interp, inner=args.compose, signature=args.sig, abbrev=args.abbrev
    )
    _emit(args, translation.formula, translation.model_dump())
    return EXIT_OK


def _classify(args: argparse.Namespace) -> int:
    level = FormulaService().classify_text(args.formula, args.sig)
    _emit(args, str(level), level.model_dump())
    return EXIT_OK


def _assignment(pairs: list[str], arithmetic: bool) -> dict[str, int]:
    env = {}
    for item in pairs:
        name, separator, value = item.partition("=")
        if not separator or not name:
            raise _UsageError(f"--var expects NAME=VALUE, got {item!r}")
        env[name.strip()] = int(value) if arithmetic else parse_code(value)
    return env


def _evaluate(args: argparse.Namespace) -> int:
    env = _assignment(args.var, is_arithmetic(get_signature(args.sig)))
    evaluation = FormulaService().evaluate_text(
        args.formula,
        args.sig,
        env=env,
        budget=args.budget,
        oracle=args.oracle == "on",
        closed=args.closed,
    )
    _emit(args, evaluation.value, evaluation.model_dump())
    return EXIT_OK


def _stage(args: argparse.Namespace) -> int:
    current = stage(args.n)
    report = check_stage_props(args.n)
    if not args.json:
        print(f"D_{current.n}: t = {current.bound}")
    return _emit_report(args, report)


def _axiom_check(args: argparse.Namespace) -> int:
    return _emit_report(args, check_axiom(args.axiom, args.n, bump=args.bump, seed=args.seed))


def _roundtrip(args: argparse.Namespace) -> int:
    return _emit_report(args, roundtrip_check(args.kind, args.range_))


def _selftest(args: argparse.Namespace) -> int:
    repository = JsonFormulaCorpusRepository(settings.corpus_file_absolute_path)
    report = VerificationService(repository).selftest(quick=args.quick, seed=args.seed)
    lines = []
    for criterion in report.criteria:
        marker = "" if criterion.primary else " (supplementary)"
        lines.append(
            f"{criterion.number:2d}. {criterion.title}{marker}: {criterion.result} "
            f"[{criterion.elapsed_ms / 1000:.1f} s]"
        )
        for sub in criterion.reports:
            if sub.result != "pass":
                lines.append(f"    {sub.subject}: {sub.result} {sub.counterexample or ''}")
    lines.append("selftest: " + ("pass" if report.passed else "fail"))
    _emit(args, "\n".join(lines), report.to_json())
    return EXIT_OK if report.passed else EXIT_FAILED


VERBS: dict[str, Callable[[argparse.Namespace], int]] = {
    "encode": _encode,
    "decode": _decode,
    "op": _operation,
    "translate": _translate,
    "classify": _classify,
    "eval": _evaluate,
    "stage": _stage,
    "axiom-check": _axiom_check,
    "roundtrip": _roundtrip,
    "selftest": _selftest,
}


def _error(args: Optional[argparse.Namespace], exc: Exception, kind: str) -> None:
    message = getattr(exc, "message", str(exc))
    if args is not None and args.json:
        details = describe(exc) if isinstance(exc, DomainException) else {}
        print(json.dumps({"error": {"type": kind, "message": message, "details": details}},
                         default=str))
    else:
        print(f"error: {message}", file=sys.stderr)


def main(argv: Optional[list[str]] = None) -> int:
    """
    Dispatch a command line.

    Args:
        argv: Arguments without the program name (sys.argv[1:] by default)

    Returns:
        The exit status
    """
    args: Optional[argparse.Namespace] = None
    try:
        args = _parse_args(argv)
        settings.configure_logging("DEBUG" if args.verbose else None)
        logger.debug(f"Dispatching {args.verb}")
        return VERBS[args.verb](args)
    except _UsageError as exc:
        _error(args, exc, "UsageError")
        return EXIT_USAGE
    except SystemExit as exc:
        # --help and --version
        return EXIT_OK if not exc.code else EXIT_USAGE
    except ResourceGuardException as exc:
        logger.warning(f"Resource guard: {exc.message}")
        _error(args, exc, type(exc).__name__)
        return EXIT_GUARD
    except DomainException as exc:
        _error(args, exc, type(exc).__name__)
        return EXIT_USAGE
    except (KeyError, ValueError) as exc:
        _error(args, exc, "UsageError")
        return EXIT_USAGE
