"""Command-line entry point: ``uuvplan {plan,simulate,sweep}``.

Exit codes: 0 success, 1 scenario validation error, 2 runtime failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .errors import PlanningError, ScenarioError
from .harness import (RunReport, dumps, emit_outputs, load_scenario, plan_scenario,
                      run_experiment, run_sweep, save_scenario, sweep_fields, sweep_summary)

log = logging.getLogger("uuvplan")

EXIT_OK, EXIT_INVALID, EXIT_RUNTIME = 0, 1, 2


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="uuvplan", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--scenario", required=True, type=Path, help="scenario JSON file")
        p.add_argument("--out", required=True, type=Path, help="output directory")
        p.add_argument("--modes", default="bnnp,cbnntap",
                       help="comma-separated subset of bnnp,cbnntap")
        return p

    common(sub.add_parser("plan", help="assignment matrix and priority list only"))
    common(sub.add_parser("simulate", help="assignment plus simulation of every pair"))
    sw = common(sub.add_parser("sweep", help="uniform-current direction/speed sweep (2D)"))
    sw.add_argument("--full-grid", action="store_true",
                    help="run every direction x speed combination")
    return ap


def _modes(text):
    from .nav import Mode

    return tuple(Mode.parse(m) for m in text.split(",") if m.strip())


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        scenario = load_scenario(args.scenario)
        modes = _modes(args.modes)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ScenarioError, ValueError) as exc:
        print(f"invalid scenario: {exc}", file=sys.stderr)
        return EXIT_INVALID

    try:
        out = args.out
        if args.command == "plan":
            matrix, priority = plan_scenario(scenario)
            report = RunReport(scenario, matrix, priority, modes)
            out.mkdir(parents=True, exist_ok=True)
            save_scenario(scenario, out / "scenario.json")
            (out / "report.json").write_text(report.to_json())
        elif args.command == "simulate":
            emit_outputs(run_experiment(scenario, modes), out)
        else:
            if scenario.map.dims != 2:
                print("invalid scenario: sweep uses 2D uniform currents", file=sys.stderr)
                return EXIT_INVALID
            runs = run_sweep(scenario, modes, sweep_fields(full_grid=args.full_grid))
            for label, report in runs:
                log.info("sweep condition %s", label)
                emit_outputs(report, out / label)
            (out / "sweep_summary.json").write_text(dumps(sweep_summary(runs)))
    except PlanningError as exc:
        print(f"planning failed: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
