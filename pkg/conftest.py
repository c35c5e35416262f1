import pytest

from lawvere import cli, logs
from lawvere.commands import universe as universe_commands
from lawvere.instances import demos
from lawvere.settings import Settings
from lawvere.universe import theorems

SETTINGS_MODULES = (cli, logs, universe_commands, demos, theorems)


@pytest.fixture(autouse=True)
def default_settings(monkeypatch):
    """Run with the shipped defaults regardless of the user's settings.json"""
    defaults = Settings.defaults()
    for module in SETTINGS_MODULES:
        for k, v in defaults.items():
            monkeypatch.setattr(module.settings, k, v)
