"""
Vanishing class size engine.
"""

import argparse
import json
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

from core.config import ConfigurationManager
from core.consts import ExitCodes, FlagKeys, Languages
from core.errors import VcsError
from models.data_models import json_default
from utils.i18n import _, initialize_i18n
from utils.stage_timer import initialize_stage_timer, save_session
from utils.vcs_logger import logger, run_logging


def read_expression(arg: str) -> str:
    """The expression itself, or the contents of the file it names."""
    path = Path(arg)
    if path.is_file():
        return path.read_text(encoding="utf-8").strip()
    return arg


def emit(data: Dict[str, Any], json_out: Optional[str]) -> None:
    text = json.dumps(data, indent=2, ensure_ascii=False, default=json_default)
    if json_out:
        Path(json_out).parent.mkdir(parents=True, exist_ok=True)
        Path(json_out).write_text(text + "\n", encoding="utf-8")
        logger.info(_("Report written to {}").format(json_out))
    else:
        sys.stdout.write(text + "\n")


def error_diagnostic(e: Exception) -> Dict[str, Any]:
    if isinstance(e, VcsError):
        return {"error": e.to_dict()}
    return {"error": {"type": type(e).__name__, "message": str(e), "details": {}}}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=_("Vanishing conjugacy class sizes of finite groups"))
    parser.add_argument(
        "--langu",
        type=str,
        choices=Languages.SUPPORTED,
        help=_("Set interface language (en, zh, ja)"),
    )
    parser.add_argument("--flags-file", type=str, default=None, help=_("Flags file (dotenv format)"))
    parser.add_argument("--bound", type=int, default=None, help=_("Enumeration bound on group orders"))
    parser.add_argument("--seed", type=int, default=None, help=_("Seed for randomized searches"))
    parser.add_argument("--json-out", type=str, default=None, help=_("Write the JSON output to this file"))
    parser.add_argument("--verbose", action="store_true", help=_("Log debug messages"))

    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help=_("Classes, vcs, classification and all checks"))
    analyze.add_argument("expr", help=_("Group expression or a file holding one"))
    analyze.add_argument("--emit-table", action="store_true", help=_("Include the character table"))
    analyze.add_argument("--timings", action="store_true", help=_("Include per-stage timings"))

    chartab = commands.add_parser("chartab", help=_("Character table only"))
    chartab.add_argument("expr", help=_("Group expression or a file holding one"))
    chartab.add_argument("--timings", action="store_true", help=_("Include per-stage timings"))

    verify = commands.add_parser("verify", help=_("Invariant checks only"))
    verify.add_argument("expr", help=_("Group expression or a file holding one"))
    verify.add_argument("--timings", action="store_true", help=_("Include per-stage timings"))

    search = commands.add_parser("search", help=_("Sweep a grid of group families"))
    search.add_argument("grid", help=_("Grid file (JSON)"))
    search.add_argument("--catalog", type=str, required=True, help=_("Results catalog (JSON lines)"))
    search.add_argument("--max-workers", type=int, default=None, help=_("Worker threads"))
    search.add_argument("--order-cap", type=int, default=None, help=_("Skip groups above this order"))
    return parser


def run_command(args: argparse.Namespace, config_manager: ConfigurationManager) -> int:
    # imported here so that --help works without the computational stack
    from services.analysis_service import AnalysisService
    from services.catalog import ResultsCatalog
    from services.search_service import SearchService, load_grid

    if args.command == "search":
        catalog = ResultsCatalog(args.catalog)
        records = SearchService(config_manager).sweep(load_grid(args.grid), catalog)
        emit(
            {
                "appended": len(records),
                "findings": [r.expr for r in records if r.finding],
                "summary": catalog.summary(),
            },
            args.json_out,
        )
        return ExitCodes.OK

    service = AnalysisService(
        config_manager,
        emit_table=getattr(args, "emit_table", False),
        timings=args.timings,
    )
    expr = read_expression(args.expr)
    if args.command == "chartab":
        emit(service.chartab(expr), args.json_out)
        return ExitCodes.OK

    report = service.analyze(expr) if args.command == "analyze" else service.verify(expr)
    emit(report.to_dict(), args.json_out)
    return ExitCodes.OK if report.all_checks_passed else ExitCodes.CHECK_FAILED


def main(argv: Optional[list] = None) -> int:
    """Main application entry point."""
    # Pre-parse --langu and --flags-file so that help text is translated
    _pre = argparse.ArgumentParser(add_help=False)
    _pre.add_argument("--langu", type=str, default=None)
    _pre.add_argument("--flags-file", type=str, default=None)
    _pre_args, _pre_remaining = _pre.parse_known_args(argv)

    try:
        config_manager = ConfigurationManager(_pre_args.flags_file)
    except VcsError as e:
        emit(error_diagnostic(e), None)
        return ExitCodes.ERROR
    language = _pre_args.langu or config_manager.get_language_config()["language"]
    initialize_i18n(language)

    args = build_parser().parse_args(argv)
    overrides = {
        FlagKeys.ENUMERATION_BOUND: args.bound,
        FlagKeys.SEED: args.seed,
        FlagKeys.MAX_WORKERS: getattr(args, "max_workers", None),
        FlagKeys.ORDER_CAP: getattr(args, "order_cap", None),
    }

    try:
        config_manager = ConfigurationManager(args.flags_file, overrides)
        log_config = config_manager.get_log_config()
        logger.configure(
            log_config["log_dir"],
            "DEBUG" if args.verbose else log_config["level"],
            log_config["timezone"],
        )
        timings = getattr(args, "timings", False)
        if timings:
            initialize_stage_timer(Path(config_manager.get_session_config()["session_dir"]))

        subject = args.grid if args.command == "search" else args.expr
        with run_logging(f"{args.command}_{subject}"):
            start = datetime.now()
            code = run_command(args, config_manager)
            logger.info(_("Finished in {:.2f}s").format((datetime.now() - start).total_seconds()))
        if timings:
            save_session({"command": args.command, "subject": subject, "exit_code": code})
        return code
    except Exception as e:
        logger.error(_("Application error: {}").format(e))
        emit(error_diagnostic(e), None)
        return ExitCodes.ERROR


if __name__ == "__main__":
    sys.exit(main())
