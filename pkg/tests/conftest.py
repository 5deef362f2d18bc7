"""Shared fixtures: the asylum hypotheses and corpus file paths."""

from __future__ import annotations

from pathlib import Path

import pytest

from folkit.asylum import asylum_hypotheses

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "folkit" / "data"

REDUCED_SET = ["ax4", "ax5", "ax7", "ax8", "ax10", "ax12"]


@pytest.fixture(scope="session")
def hypotheses():
    return asylum_hypotheses()


@pytest.fixture(scope="session")
def all_twelve(hypotheses):
    return list(hypotheses.values())


@pytest.fixture(scope="session")
def reduced_six(hypotheses):
    return [hypotheses[label] for label in REDUCED_SET]


@pytest.fixture(scope="session")
def figure1_text():
    return (DATA_DIR / "figure1.p").read_text(encoding="utf-8")
