import pathlib

import pytest

from splpat.model.questionnaire import AnswerSheet
from splpat.model.standard import standard_engine

import cases

REPO_ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES_DIR = REPO_ROOT / "fixtures"
GOLDEN_DIR = pathlib.Path(__file__).resolve().parent / "golden"


@pytest.fixture(scope="session")
def engine():
    return standard_engine()


@pytest.fixture(scope="session")
def case_sheets():
    return {
        case: AnswerSheet(
            organization=case,
            answers=cases.answers_dict(case),
            declared_cmm=cases.DECLARED_CMM[case],
        )
        for case in "ABCD"
    }


@pytest.fixture
def fixtures_dir():
    return FIXTURES_DIR
