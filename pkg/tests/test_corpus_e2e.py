"""
End-to-end (E2E) test for the corpus run.

This test:
- Points the output, report and docs directories at temporary directories
- Executes run_corpus.py twice via subprocess
- Verifies every corpus script passed and every trace replayed identically
- Compares the trace JSON and SVG figures of the two runs byte for byte

Ensures the corpus run is complete and deterministic.
"""

import os
import subprocess
import sys
from pathlib import Path

import pandas as pd


def _run_corpus(repo_root: Path, base: Path) -> Path:
    out_dir = base / "out"
    reports_dir = base / "reports"
    docs_dir = base / "docs"
    for d in (out_dir, reports_dir, docs_dir):
        d.mkdir(parents=True)

    env = os.environ.copy()
    env["ORIGAMI_OUT_DIR"] = str(out_dir)
    env["ORIGAMI_REPORTS_DIR"] = str(reports_dir)
    env["ORIGAMI_DOCS_DIR"] = str(docs_dir)
    env["PYTHONPATH"] = os.pathsep.join(filter(None, [str(repo_root / "src"), env.get("PYTHONPATH")]))

    subprocess.run(
        [sys.executable, "run_corpus.py"],
        cwd=repo_root,
        check=True,
        env=env,
    )
    return base


def test_corpus_runs_end_to_end(tmp_path: Path) -> None:
    repo_root = Path(__file__).resolve().parents[1]
    first = _run_corpus(repo_root, tmp_path / "first")
    second = _run_corpus(repo_root, tmp_path / "second")

    report = pd.read_csv(first / "reports" / "corpus_report.csv")
    assert len(report) == len(list((repo_root / "corpus").glob("*.ori")))
    assert (report["status"] == "ok").all()

    audit = pd.read_csv(first / "reports" / "replay_audit.csv")
    assert audit["identical"].all()

    assert (first / "docs" / "axiom_levels.md").is_file()

    outputs = sorted(p.relative_to(first / "out") for p in (first / "out").rglob("*") if p.is_file())
    assert any(p.suffix == ".json" for p in outputs)
    assert any(p.suffix == ".svg" for p in outputs)
    for rel in outputs:
        assert (first / "out" / rel).read_bytes() == (second / "out" / rel).read_bytes(), rel
