"""
xxzring command-line entry point.

This module wires together:
- Structured logging (structlog) on standard error
- The argparse command surface: ``sweep``, ``tc``, ``preset``, ``validate``
- The global exception handler mapping AppException to exit codes
  (0 success, 1 validation error, 2 numerical error)
"""
from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import NoReturn

import orjson
import structlog
from pydantic import ValidationError as PydanticValidationError

from .core.config import get_settings
from .core.exceptions import AppException, UsageError, ValidationError
from .core.presets import get_preset_manager
from .repositories.sweep_repository import SweepRepository
from .schemas.entanglement import QubitPair
from .schemas.ring import RingSpec
from .services.hamiltonian_service import build_hamiltonian, dump_hamiltonian_csv
from .services.ring_service import derive_bonds
from .services.sweep_service import critical_temperature, run_sweep

logger = structlog.get_logger(__name__)


# ---------------------------------------------------------------------------
# Logging
# ---------------------------------------------------------------------------

def configure_logging() -> None:
    """Configure structured logging via structlog."""
    settings = get_settings()
    log_level = getattr(logging, settings.LOG_LEVEL.upper(), logging.WARNING)

    structlog.configure(
        processors=[
            structlog.contextvars.merge_contextvars,
            structlog.processors.add_log_level,
            structlog.processors.TimeStamper(fmt="iso"),
            (
                structlog.dev.ConsoleRenderer()
                if settings.is_development
                else structlog.processors.JSONRenderer()
            ),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(log_level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------

class _ArgumentParser(argparse.ArgumentParser):
    """argparse that reports usage problems as UsageError (exit 1) instead of exiting 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: {message}")


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="xxzring",
        description="Thermal pairwise entanglement in XXZ rings with impurities.",
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    sweep = commands.add_parser("sweep", help="Run a parameter sweep from a JSON plan")
    sweep.add_argument("--plan", type=Path, required=True, help="JSON sweep plan")
    sweep.add_argument("--out", type=Path, required=True, help="CSV output path")
    sweep.add_argument("--json", type=Path, default=None, help="Optional full JSON result path")
    sweep.add_argument("--threads", type=_non_negative_int, default=None, help="Worker threads (0 = auto)")

    tc = commands.add_parser("tc", help="Critical temperature of a pair by bisection")
    source = tc.add_mutually_exclusive_group(required=True)
    source.add_argument("--spec", type=Path, help="JSON ring spec")
    source.add_argument("--preset", help="Preset name")
    tc.add_argument("--pair", required=True, help="Pair as i,j")
    tc.add_argument("--t-lo", type=float, required=True)
    tc.add_argument("--t-hi", type=float, required=True)
    tc.add_argument("--tol", type=float, default=1e-3)
    for name in ("alpha", "beta", "b", "temperature"):
        tc.add_argument(f"--{name}", type=float, default=None, help=f"Override {name}")

    preset = commands.add_parser("preset", help="Print a named preset as JSON")
    preset.add_argument("name")

    validate = commands.add_parser("validate", help="Check a ring spec file")
    validate.add_argument("spec", type=Path)
    validate.add_argument(
        "--dump-hamiltonian", type=Path, default=None, metavar="PATH",
        help="Write H as CSV (dimension line, then dense rows)",
    )
    return parser


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _print_json(document: object) -> None:
    sys.stdout.write(orjson.dumps(document, option=orjson.OPT_INDENT_2).decode() + "\n")


def _cmd_sweep(args: argparse.Namespace) -> int:
    repository = SweepRepository()
    plan = repository.load_plan(args.plan)
    threads = args.threads if args.threads is not None else get_settings().SWEEP_MAX_WORKERS
    result = run_sweep(plan, max_workers=threads or None)
    repository.write_csv(result, args.out)
    if args.json is not None:
        repository.write_json(result, args.json)
    sys.stdout.write(f"{len(result.rows)} rows written to {args.out}\n")
    return 0


def _cmd_tc(args: argparse.Namespace) -> int:
    spec: RingSpec
    if args.spec is not None:
        spec = SweepRepository().load_spec(args.spec)
    else:
        spec = get_preset_manager().get(args.preset)
    overrides = {
        name: getattr(args, name)
        for name in ("alpha", "beta", "b", "temperature")
        if getattr(args, name) is not None
    }
    if overrides:
        spec = spec.with_overrides(**overrides)
    pair = QubitPair.model_validate(args.pair)
    t_c = critical_temperature(spec, pair, args.t_lo, args.t_hi, args.tol)
    _print_json({"pair": pair.label, "critical_temperature": t_c, "tol": args.tol})
    return 0


def _cmd_preset(args: argparse.Namespace) -> int:
    _print_json(get_preset_manager().get(args.name).to_document())
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    spec = SweepRepository().load_spec(args.spec)
    bonds = derive_bonds(spec)
    if args.dump_hamiltonian is not None:
        dump_hamiltonian_csv(build_hamiltonian(spec, bonds), args.dump_hamiltonian)
    _print_json(
        {
            "valid": True,
            "spec": spec.to_document(),
            "bonds": [bond.model_dump(mode="json") for bond in bonds.bonds],
        }
    )
    return 0


_COMMANDS = {
    "sweep": _cmd_sweep,
    "tc": _cmd_tc,
    "preset": _cmd_preset,
    "validate": _cmd_validate,
}


def _report(exc: AppException) -> int:
    """Global handler: JSON diagnostic on standard error, exit code from the exception."""
    logger.error("command_failed", error_code=exc.error_code, message=exc.message)
    sys.stderr.write(orjson.dumps(exc.to_dict()).decode() + "\n")
    return exc.exit_code


def main(argv: Sequence[str] | None = None) -> int:
    """Run one CLI invocation and return its exit code."""
    configure_logging()
    try:
        args = _build_parser().parse_args(argv)
        structlog.contextvars.bind_contextvars(command=args.command)
        return _COMMANDS[args.command](args)
    except PydanticValidationError as exc:
        return _report(ValidationError.from_pydantic(exc))
    except AppException as exc:
        return _report(exc)
    finally:
        structlog.contextvars.unbind_contextvars("command")


def run() -> None:
    """Console-script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    run()
