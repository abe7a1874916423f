"""
Runtime settings for the engine.

Values are read once from ORIGAMI_* environment variables, after an optional
.env file at the repository root has been loaded with python-dotenv. Real
environment variables take precedence over .env entries.

Notes:
- degree_cap and precision_cap bound the exact zero test; crossing either
  raises PrecisionExhausted instead of guessing.
- override_settings() swaps the active settings for the duration of a
  with-block (tests, CLI flags).
"""

from __future__ import annotations

import os
import threading
from collections.abc import Iterator
from contextlib import contextmanager
from dataclasses import dataclass, fields, replace

from dotenv import load_dotenv

from origami_engine.errors import ConfigError
from origami_engine.utils.io import repo_root


@dataclass(frozen=True)
class Settings:
    degree_cap: int = 2**16
    precision_cap: int = 4096
    guard_bits: int = 24
    digits: int = 30
    trace_digits: int = 50
    svg_size: int = 400
    svg_samples: int = 512
    viewport: tuple[float, float, float, float] = (-4.0, -4.0, 4.0, 4.0)
    ngon_bound: int = 10**9
    max_expr_chars: int = 4000
    log_level: str = "info"


def parse_viewport(text: str) -> tuple[float, float, float, float]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:  # noqa: PLR2004
        raise ConfigError(f"viewport needs four comma-separated numbers, got {text!r}")
    try:
        xmin, ymin, xmax, ymax = (float(p) for p in parts)
    except ValueError as exc:
        raise ConfigError(f"viewport is not numeric: {text!r}") from exc
    return (xmin, ymin, xmax, ymax)


def _coerce(name: str, raw: str) -> object:
    if name == "viewport":
        return parse_viewport(raw)
    if name == "log_level":
        return raw.strip().lower()
    try:
        value = int(raw)
    except ValueError as exc:
        raise ConfigError(f"ORIGAMI_{name.upper()} must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ConfigError(f"ORIGAMI_{name.upper()} must be positive, got {value}")
    return value


def load_settings() -> Settings:
    load_dotenv(repo_root() / ".env", override=False)
    values: dict[str, object] = {}
    for field in fields(Settings):
        raw = os.environ.get(f"ORIGAMI_{field.name.upper()}")
        if raw:
            values[field.name] = _coerce(field.name, raw)
    return Settings(**values)  # type: ignore[arg-type]


_lock = threading.Lock()
_active: Settings | None = None


def get_settings() -> Settings:
    global _active
    with _lock:
        if _active is None:
            _active = load_settings()
        return _active


@contextmanager
def override_settings(**changes: object) -> Iterator[Settings]:
    global _active
    previous = get_settings()
    unknown = set(changes) - {f.name for f in fields(Settings)}
    if unknown:
        raise ConfigError(f"unknown settings: {sorted(unknown)}")
    updated = replace(previous, **changes)  # type: ignore[arg-type]
    with _lock:
        _active = updated
    try:
        yield updated
    finally:
        with _lock:
            _active = previous
