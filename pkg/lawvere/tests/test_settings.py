import hashlib
import json
import logging
from unittest import mock

import pytest

from lawvere import logs, settings, utils
from lawvere.core.exceptions import LawvereError


@pytest.fixture
def settings_file(tmp_path):
    p = tmp_path / "settings.json"
    with mock.patch.object(settings, "get_settings_file_path", return_value=p):
        yield p


def test_settings_file_created(settings_file):
    s = settings.Settings()
    assert json.loads(settings_file.read_text()) == {"LOG_LEVEL": "info", "LOG_TO_CONSOLE": False}
    assert s.DEFAULT_FUEL == 10_000


def test_settings_override(settings_file):
    settings_file.write_text(json.dumps({"DEFAULT_FUEL": 50, "NOT_A_SETTING": 1}))
    s = settings.Settings()
    assert s.DEFAULT_FUEL == 50
    assert not hasattr(s, "NOT_A_SETTING")
    assert settings.Settings.defaults()["DEFAULT_FUEL"] == 10_000


def test_settings_invalid_json(settings_file):
    settings_file.write_text("{not json")
    with pytest.raises(LawvereError):
        settings.Settings()


def test_data_path(settings_file):
    assert settings.Settings().data_path("liar.json").endswith("liar.json")


@pytest.mark.parametrize(
    "level,expected", [
        ("debug", logging.DEBUG),
        ("INFO", logging.INFO),
        ("warning", logging.WARNING),
        ("error", logging.ERROR),
        ("critical", logging.CRITICAL),
        ("chatty", logging.DEBUG),
        (None, logging.DEBUG),
    ]
)
def test_get_log_level(level, expected):
    assert logs.get_log_level(level) == expected


def test_get_log_location():
    assert logs.get_log_location("lawvere run/1").name == "lawvere_run1.log"


def test_clean_filename():
    assert utils.clean_filename("café menu?.txt") == "cafe_menu.txt"


def test_inputs_digest(tmp_path):
    p = tmp_path / "m.json"
    p.write_bytes(b"{}")
    expected = hashlib.sha256(b"diagonal --input m.json\n{}").hexdigest()
    assert utils.inputs_digest(["diagonal", "--input", "m.json"], [p]) == "sha256:" + expected


def test_inputs_digest_no_files():
    expected = hashlib.sha256(b"formal goedel").hexdigest()
    assert utils.inputs_digest(["formal", "goedel"]) == "sha256:" + expected
