"""
Shared file I/O utilities for the engine and the corpus runner.
"""

import json
import os
from pathlib import Path
from typing import Any

import pandas as pd


def repo_root() -> Path:
    return Path(__file__).resolve().parents[3]


def corpus_dir() -> Path:
    override = os.environ.get("ORIGAMI_CORPUS_DIR")
    if override:
        return Path(override)
    return repo_root() / "corpus"


def output_dir() -> Path:
    override = os.environ.get("ORIGAMI_OUT_DIR")
    if override:
        return Path(override)
    return repo_root() / "out"


def reports_dir() -> Path:
    override = os.environ.get("ORIGAMI_REPORTS_DIR")
    if override:
        return Path(override)
    return repo_root() / "reports"


def docs_dir() -> Path:
    override = os.environ.get("ORIGAMI_DOCS_DIR")
    if override:
        return Path(override)
    return repo_root() / "docs"


def ensure_dir(path: Path) -> None:
    path.mkdir(parents=True, exist_ok=True)


def read_text(path: Path) -> str:
    return path.read_text(encoding="utf-8")


def write_text(text: str, path: Path) -> None:
    """
    Write text with a fixed newline convention.

    Trace JSON and SVG outputs are compared byte-for-byte between runs, so
    the platform newline translation is disabled.
    """
    ensure_dir(path.parent)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def write_json(payload: Any, path: Path) -> None:
    write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", path)


def write_csv(df: pd.DataFrame, path: Path) -> None:
    ensure_dir(path.parent)
    df.to_csv(path, index=False)
