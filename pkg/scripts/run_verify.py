#!/usr/bin/env python3
"""Run the full check catalogue and drop report.json next to this script.

Usage: python3 scripts/run_verify.py [seed]
"""

import pathlib
import sys

try:
    from diraclab.config import RunConfig
except ImportError:
    sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))
    from diraclab.config import RunConfig

from diraclab.report import report_json, text_summary
from diraclab.suites import run_suite


def main() -> int:
    seed = int(sys.argv[1]) if len(sys.argv) > 1 else 137
    report = run_suite(RunConfig(seed=seed))
    out = pathlib.Path(__file__).resolve().parent / "report.json"
    out.write_text(report_json(report), encoding="utf-8")
    print(text_summary(report))
    print(f"report written to {out}")
    return 0 if report.all_passed() else 1


if __name__ == "__main__":
    sys.exit(main())
