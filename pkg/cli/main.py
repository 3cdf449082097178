# FILE: cli/main.py

import argparse
import logging
import sys
import traceback

from pydantic import ValidationError

from cli.commands import run_command
from cli.schemas import ACTIONS, ErrorRecord, RunConfig, envelope_meta
from cli.utils_cli.emit import EmitError, emit
from nonhermitian import __version__, config
from nonhermitian.confined import Coupling
from nonhermitian.errors import SpectralError

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_NUMERICAL, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    """Malformed command line."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ========== Argument Parsing ==========

def _floats(text: str) -> list[float]:
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from e


def _ints(text: str) -> list[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from e


def _common_flags() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--T", type=_floats, help="box length(s)")
    common.add_argument("--mu", type=_floats, help="coupling strength(s)")
    common.add_argument("--N", type=_ints, help="basis functions per parity")
    common.add_argument("--tau", type=float, help="metric reference time (default: largest --t)")
    common.add_argument("--t", type=_floats, help="evolution time(s)")
    common.add_argument("--psi0", type=_floats, help="initial state as re,im[,re,im...]")
    common.add_argument("--coupling", choices=[c.value for c in Coupling])
    common.add_argument("--tol-im", dest="tol_im", type=float, help="imaginary-part threshold for real labels")
    common.add_argument("--format", choices=["csv", "json"])
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--seed", type=int)
    common.add_argument("--state", type=int, help="start from this eigenstate (0: seeded random)")
    common.add_argument("--points", type=int, help="wavefunction grid size")
    common.add_argument("--count", type=int, help="number of lowest states to refine")
    common.add_argument("--step-divisor", dest="step_divisor", type=int, help="shooting step = T / divisor")
    common.add_argument("--m", type=_ints, help="odd potential exponents")
    common.add_argument("--x", type=_floats, help="residual sample points")
    common.add_argument("--log-level", dest="log_level", default=config.LOG_LEVEL)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    parser = _Parser(prog="nonhermitian", description="Spectra and dynamics of non-Hermitian model Hamiltonians")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    for command in ("two-level", "confined", "table"):
        sub = commands.add_parser(command, parents=[common])
        sub.add_argument("action", choices=ACTIONS[command])
    for command in ("sweep", "shoot", "asymptotics"):
        commands.add_parser(command, parents=[common])
    return parser


def parse_config(argv: list[str] | None = None) -> tuple[RunConfig, str]:
    namespace = vars(build_parser().parse_args(argv))
    log_level = namespace.pop("log_level")
    fields = {key: value for key, value in namespace.items() if value is not None}
    return RunConfig(**fields), log_level


# ========== Entry Point ==========

def _report(error: Exception, code: int) -> int:
    record = ErrorRecord(error=type(error).__name__, detail=str(error))
    sys.stderr.write(record.model_dump_json() + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        run, log_level = parse_config(argv)
        logging.basicConfig(level=log_level.upper(), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    except (UsageError, ValidationError, ValueError) as e:
        return _report(e, EXIT_USAGE)

    try:
        frame = run_command(run)
        emit(frame, envelope_meta(run), run.format, run.out)
    except SpectralError as e:
        logger.error(f"❌ {run.command} failed: {str(e)}")
        return _report(e, EXIT_NUMERICAL)
    except EmitError as e:
        logger.error(f"❌ output failed: {str(e)}")
        return _report(e, EXIT_NUMERICAL)
    except (ValidationError, ValueError) as e:
        return _report(e, EXIT_USAGE)
    except Exception as e:
        # ========== Global Exception Handler ==========
        logger.error(f"Unhandled exception: {str(e)}")
        logger.error(traceback.format_exc())
        return _report(e, EXIT_NUMERICAL)

    logger.info(f"✅ {run.command} finished")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
