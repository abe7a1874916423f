"""
Run the full corpus batch in order.
"""

import time

import pandas as pd

from origami_engine.corpus import audit_replay, evaluate_corpus, generate_level_reference
from origami_engine.utils.io import reports_dir
from origami_engine.utils.logging import configure_logging, get_logger

configure_logging(level="info")
logger = get_logger(__name__)

STEPS = [
    ("evaluate_corpus", evaluate_corpus),
    ("audit_replay", audit_replay),  # Trace re-execution check
    ("generate_level_reference", generate_level_reference),
]


def main() -> None:
    logger.info("Starting origami corpus run")

    for name, module in STEPS:
        t_start = time.time()
        logger.info("→ Running %s", name)
        try:
            module.main()
            logger.info("✓ Completed %s in %.2fs", name, time.time() - t_start)
        except Exception as e:
            logger.error("✗ Step %s failed: %s", name, e)
            raise

    # ── Final summary ──
    reports_path = reports_dir()

    try:
        report = pd.read_csv(reports_path / "corpus_report.csv")
        failing = report["status"].ne("ok").sum()
        corpus_status = (
            f"✅ {len(report)} scripts passed" if failing == 0 else f"⚠️ {failing} failing"
        )
        assertion_count = int(report["assertions_passed"].sum())
    except Exception:
        corpus_status = "report file missing"
        assertion_count = 0

    try:
        audit = pd.read_csv(reports_path / "replay_audit.csv")
        mismatched = (~audit["identical"]).sum()
        replay_status = "✅ All identical" if mismatched == 0 else f"⚠️ {mismatched} mismatched"
    except Exception:
        replay_status = "audit file missing"

    logger.info("═" * 80)
    logger.info("Corpus run completed successfully")
    logger.info("Summary:")
    logger.info(f"   Steps completed : {len(STEPS)}")
    logger.info(f"   Corpus          : {corpus_status}")
    logger.info(f"   Assertions held : {assertion_count}")
    logger.info(f"   Replay audit    : {replay_status}")
    logger.info("   Full details in: reports/*.csv, out/ and docs/axiom_levels.md")
    logger.info("═" * 80)


if __name__ == "__main__":
    main()
