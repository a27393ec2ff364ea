import importlib
import logging

import logzero
import pytest

import d2ctools

from d2ctools.utils.common_init import configure_logging, get_brute_force_threshold
from d2ctools.utils.misc import format_elapsed, int_list


def test_threshold_default(monkeypatch):
    monkeypatch.delenv("D2C_BRUTE_THRESHOLD", raising=False)
    assert get_brute_force_threshold() == 9


def test_threshold_precedence(monkeypatch):
    monkeypatch.setenv("D2C_BRUTE_THRESHOLD", "12")
    assert get_brute_force_threshold() == 12
    assert get_brute_force_threshold(4) == 4


@pytest.mark.parametrize("value", ["nine", "-1"])
def test_threshold_rejects_bad_environment(monkeypatch, value):
    monkeypatch.setenv("D2C_BRUTE_THRESHOLD", value)
    with pytest.raises(ValueError):
        get_brute_force_threshold()


def test_configure_logging(monkeypatch):
    monkeypatch.setenv("D2C_LOG_LEVEL", "debug")
    assert configure_logging() == logging.DEBUG
    assert configure_logging("warning") == logging.WARNING
    with pytest.raises(ValueError):
        configure_logging("chatty")


def test_import_applies_default_level(monkeypatch):
    logzero.loglevel(logging.DEBUG)
    monkeypatch.delenv("D2C_LOG_LEVEL", raising=False)
    importlib.reload(d2ctools)
    assert not logzero.logger.isEnabledFor(logging.DEBUG)
    assert logzero.logger.isEnabledFor(logging.WARNING)


def test_import_survives_bad_level(monkeypatch):
    monkeypatch.setenv("D2C_LOG_LEVEL", "chatty")
    importlib.reload(d2ctools)
    assert logzero.logger.level == logging.WARNING


def test_formatting_helpers():
    assert int_list((2, 1, 0)) == "[2,1,0]"
    assert int_list([]) == "[]"
    assert format_elapsed(2).startswith("2 seconds")
    assert "milliseconds" in format_elapsed(0.25)
