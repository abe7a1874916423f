"""
Evaluate every .ori script in the corpus.

For each script (sorted by file name) it:
- parses and evaluates the program at its declared level
- writes the construction trace to out/traces/<name>.json
- writes a figure of the bound objects to out/figures/<name>.svg
- records the outcome with the CLI exit code it would produce

Output:
- reports/corpus_report.csv (name, status, exit_code, assertions_passed,
  assertions_failed, steps, objects, seconds)

Notes:
- Trace and figure files carry no timestamps, so two runs over the same
  corpus are byte-identical. Only the report's seconds column varies.
- Raises RuntimeError after writing the report when any script did not pass.
"""

from __future__ import annotations

import time
from pathlib import Path

import pandas as pd

from origami_engine.cli.render import render
from origami_engine.config.levels import EXIT_CODES
from origami_engine.errors import EvalError, SourceError
from origami_engine.script import evaluate, parse
from origami_engine.utils.io import (
    corpus_dir,
    output_dir,
    read_text,
    reports_dir,
    write_csv,
    write_json,
    write_text,
)
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)

REPORT_COLUMNS = [
    "name",
    "status",
    "exit_code",
    "assertions_passed",
    "assertions_failed",
    "steps",
    "objects",
    "seconds",
]


def corpus_scripts() -> list[Path]:
    scripts = sorted(corpus_dir().glob("*.ori"))
    if not scripts:
        raise FileNotFoundError(f"No .ori scripts found in {corpus_dir()}")
    return scripts


def evaluate_script(path: Path) -> dict:
    start = time.time()
    row = {"name": path.stem, "assertions_passed": 0, "assertions_failed": 0, "steps": 0, "objects": 0}
    try:
        result = evaluate(parse(read_text(path)))
    except SourceError as exc:
        logger.error("%s: parse error %s", path.name, exc)
        row.update(status="parse", exit_code=EXIT_CODES["parse"])
    except EvalError as exc:
        logger.error("%s: %s", path.name, exc)
        status = "precision" if exc.kind == "PrecisionExhausted" else "eval"
        row.update(status=status, exit_code=EXIT_CODES[status])
    else:
        write_json(result.trace.to_json(), output_dir() / "traces" / f"{path.stem}.json")
        write_text(render(result.env), output_dir() / "figures" / f"{path.stem}.svg")
        failed = len(result.failures)
        row.update(
            status="assert" if failed else "ok",
            exit_code=EXIT_CODES["assert"] if failed else EXIT_CODES["ok"],
            assertions_passed=len(result.assertions) - failed,
            assertions_failed=failed,
            steps=len(result.trace.steps),
            objects=len(result.trace.objects),
        )
    row["seconds"] = round(time.time() - start, 3)
    return row


def main() -> None:
    rows = []
    for path in corpus_scripts():
        logger.info("Evaluating %s", path.name)
        rows.append(evaluate_script(path))

    report = pd.DataFrame(rows, columns=REPORT_COLUMNS)
    write_csv(report, reports_dir() / "corpus_report.csv")

    failing = report.loc[report["status"] != "ok", "name"].tolist()
    logger.info("Corpus: %d scripts, %d failing", len(report), len(failing))
    if failing:
        raise RuntimeError(f"Corpus scripts did not pass: {', '.join(failing)}")


if __name__ == "__main__":
    main()
