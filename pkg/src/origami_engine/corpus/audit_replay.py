"""
Replay every corpus trace and check it reproduces itself.

Each script is evaluated again, its trace re-executed step by step with
folds.replay, and the two traces compared through their JSON form.

Output:
- reports/replay_audit.csv (script, steps, identical)
"""

from __future__ import annotations

import json

import pandas as pd

from origami_engine.corpus.evaluate_corpus import corpus_scripts
from origami_engine.errors import OrigamiError
from origami_engine.folds import replay
from origami_engine.script import evaluate, parse
from origami_engine.utils.io import read_text, reports_dir, write_csv
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)


def main() -> None:
    rows: list[dict] = []
    for path in corpus_scripts():
        try:
            trace = evaluate(parse(read_text(path))).trace
            original = json.dumps(trace.to_json(), sort_keys=True)
            replayed = json.dumps(replay(trace).to_json(), sort_keys=True)
            identical = original == replayed
        except OrigamiError as exc:
            logger.error("%s: replay failed: %s", path.name, exc)
            rows.append({"script": path.stem, "steps": 0, "identical": False})
            continue
        if not identical:
            logger.warning("%s: replayed trace differs", path.name)
        rows.append({"script": path.stem, "steps": len(trace.steps), "identical": identical})

    audit = pd.DataFrame(rows, columns=["script", "steps", "identical"])
    write_csv(audit, reports_dir() / "replay_audit.csv")

    mismatched = audit.loc[~audit["identical"], "script"].tolist()
    if mismatched:
        raise RuntimeError(f"Replay mismatch for: {', '.join(mismatched)}")
    logger.info("Replay audit: all %d traces identical", len(audit))


if __name__ == "__main__":
    main()
