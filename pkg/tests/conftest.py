from pathlib import Path

import pytest

from fecsim import BatteryParams, parse_config

CONFIG_PATH = Path(__file__).resolve().parents[1] / "configs" / "paper_baseline.yaml"


@pytest.fixture(scope="session")
def paper_config_text() -> str:
    return CONFIG_PATH.read_text()


@pytest.fixture(scope="session")
def paper_plan_and_scenarios(paper_config_text):
    return parse_config(paper_config_text)


@pytest.fixture(scope="session")
def paper_plan(paper_plan_and_scenarios):
    return paper_plan_and_scenarios[0]


@pytest.fixture(scope="session")
def paper_scenarios(paper_plan_and_scenarios):
    return paper_plan_and_scenarios[1]


@pytest.fixture(scope="session")
def pack() -> BatteryParams:
    """The 5.2 Ah pack (10.4 A charge current is 2C)."""
    return BatteryParams(nominal_capacity=5.2)
