"""Tests for the run defaults."""

from types import SimpleNamespace

import pytest

from xlmimo.settings.common import plugin_settings


def test_defaults_fill_unset_values(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv("XLMIMO_OUTPUT_ROOT", raising=False)
    host = SimpleNamespace(XLMIMO_EVAL_LAYOUTS=5)

    plugin_settings(host)

    assert host.XLMIMO_OUTPUT_ROOT == "results"
    assert host.XLMIMO_TRAIN_N_MC == 20
    assert host.XLMIMO_STEPS_PER_EPISODE == 10
    assert host.XLMIMO_EVAL_N_MC == 200
    assert host.XLMIMO_EVAL_LAYOUTS == 5


def test_environment_sets_output_root(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("XLMIMO_OUTPUT_ROOT", "/srv/xlmimo")
    host = SimpleNamespace()

    plugin_settings(host)

    assert host.XLMIMO_OUTPUT_ROOT == "/srv/xlmimo"
