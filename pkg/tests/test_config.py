import logging
import os

import pytest

from powermatch import number_theory
from powermatch.config import AppConfig
from powermatch.utils.logger import get_logger


@pytest.fixture
def clean_env(monkeypatch):
    for name in ("DATA_DIR", "REPORT_FILE"):
        monkeypatch.delenv(name, raising=False)


def test_report_file_follows_data_dir(clean_env):
    settings = AppConfig(_env_file=None, DATA_DIR="/srv/runs")
    assert settings.REPORT_FILE == os.path.join("/srv/runs", "report.json")


def test_report_file_default_and_override(clean_env, monkeypatch):
    assert AppConfig(_env_file=None).REPORT_FILE == os.path.join("./data/", "report.json")

    monkeypatch.setenv("DATA_DIR", "/srv/runs")
    monkeypatch.setenv("REPORT_FILE", "/tmp/checks.json")
    assert AppConfig(_env_file=None).REPORT_FILE == "/tmp/checks.json"


def test_loggers_live_under_the_package():
    assert number_theory.log.name == "powermatch.number_theory"
    assert get_logger("scripts").name == "powermatch.scripts"
    assert get_logger().name.startswith("powermatch.")
    assert logging.getLogger("powermatch").handlers
