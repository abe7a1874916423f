"""
Generate docs/axiom_levels.md from config.levels.

The document lists each engine level with its axioms and the field it
reaches, the derivations the reduced level relies on, and the axioms every
macro needs.
"""

from __future__ import annotations

from origami_engine.config.levels import (
    AXIOM_LEVELS,
    DEFAULT_LEVEL,
    DERIVED_AXIOMS,
    MACRO_REQUIREMENTS,
    derivable,
)
from origami_engine.utils.io import docs_dir, write_text
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)


def build_reference() -> str:
    lines: list[str] = []
    lines.append("# Axiom Levels")
    lines.append("")
    lines.append("Generated from `origami_engine.config.levels` by `run_corpus.py`.")
    lines.append(f"Scripts without a `level` directive run at `{DEFAULT_LEVEL}`.")
    lines.append("")
    lines.append("| Level | Axioms | Derived | Field | Description |")
    lines.append("|-------|--------|---------|-------|-------------|")
    for name, spec in AXIOM_LEVELS.items():
        derived = [a for a in DERIVED_AXIOMS if derivable(name, a)]
        lines.append(
            f"| `{name}` | {', '.join(spec['axioms'])} | {', '.join(derived) or '-'} "
            f"| {spec['field']} | {spec['description']} |"
        )
    lines.append("")
    lines.append("## Derived axioms")
    lines.append("")
    for axiom, needed in DERIVED_AXIOMS.items():
        lines.append(f"- {axiom} from {', '.join(needed)}")
    lines.append("")
    lines.append("## Macro requirements")
    lines.append("")
    lines.append("| Macro | Axioms |")
    lines.append("|-------|--------|")
    for macro, needed in MACRO_REQUIREMENTS.items():
        lines.append(f"| `{macro}` | {', '.join(needed) or '(none)'} |")
    return "\n".join(lines) + "\n"


def main() -> None:
    out_path = docs_dir() / "axiom_levels.md"
    write_text(build_reference(), out_path)
    logger.info("Wrote %s", out_path)


if __name__ == "__main__":
    main()
