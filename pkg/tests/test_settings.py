import logging

import pytest

from origami_engine.config.levels import (
    AXIOM_LEVELS,
    DEFAULT_LEVEL,
    EXIT_CODES,
    allows,
    derivable,
    level_names,
)
from origami_engine.config.settings import (
    Settings,
    get_settings,
    load_settings,
    override_settings,
    parse_viewport,
)
from origami_engine.errors import ConfigError
from origami_engine.utils.logging import configure_logging, get_logger


# test defaults when no ORIGAMI_* variables are set
def test_defaults(monkeypatch):
    for name in ("ORIGAMI_DIGITS", "ORIGAMI_PRECISION_CAP", "ORIGAMI_VIEWPORT"):
        monkeypatch.delenv(name, raising=False)
    settings = load_settings()

    assert settings.digits == 30  # noqa: PLR2004
    assert settings.degree_cap == 2**16  # noqa: PLR2004
    assert settings.viewport == (-4.0, -4.0, 4.0, 4.0)


# test env values are coerced and validated
def test_env_overrides(monkeypatch):
    monkeypatch.setenv("ORIGAMI_DIGITS", "12")
    monkeypatch.setenv("ORIGAMI_VIEWPORT", "-1, -2, 3, 4")
    monkeypatch.setenv("ORIGAMI_LOG_LEVEL", "DEBUG")
    settings = load_settings()

    assert settings.digits == 12  # noqa: PLR2004
    assert settings.viewport == (-1.0, -2.0, 3.0, 4.0)
    assert settings.log_level == "debug"


@pytest.mark.parametrize("raw", ["abc", "0", "-5"])
def test_env_rejects_bad_integers(monkeypatch, raw):
    monkeypatch.setenv("ORIGAMI_PRECISION_CAP", raw)
    with pytest.raises(ConfigError):
        load_settings()


# test viewport parsing errors
def test_parse_viewport_errors():
    with pytest.raises(ConfigError):
        parse_viewport("1,2,3")
    with pytest.raises(ConfigError):
        parse_viewport("a,b,c,d")


# test override_settings is scoped to the with-block
def test_override_settings_restores():
    before = get_settings()
    with override_settings(digits=7) as active:
        assert active.digits == 7  # noqa: PLR2004
        assert get_settings().digits == 7  # noqa: PLR2004
    assert get_settings() is before

    with pytest.raises(ConfigError):
        with override_settings(no_such_field=1):
            pass


# test Settings is immutable
def test_settings_frozen():
    with pytest.raises(AttributeError):
        Settings().digits = 3  # type: ignore[misc]


# test the level contract is self-consistent
def test_levels_contract():
    assert DEFAULT_LEVEL in AXIOM_LEVELS
    assert level_names() == ["thalian", "pythagorean", "euclidean", "origami", "reduced"]
    assert allows("euclidean", "O5")
    assert not allows("euclidean", "O6")
    # reduced lacks O1 and O4 but can derive both
    assert derivable("reduced", "O1")
    assert derivable("reduced", "O4")
    assert not derivable("origami", "O1")  # offered directly
    assert not derivable("thalian", "O4")


# test exit codes are distinct
def test_exit_codes_distinct():
    assert len(set(EXIT_CODES.values())) == len(EXIT_CODES)
    assert EXIT_CODES["usage"] == 64  # noqa: PLR2004


# test configure_logging accepts names and constants
def test_configure_logging_levels():
    configure_logging("warning")
    configure_logging(logging.DEBUG)
    logger = get_logger("origami_engine.test")
    assert logger.name == "origami_engine.test"
    assert isinstance(logger, logging.Logger)
