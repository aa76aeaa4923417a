import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from ccgnli.harness import Config, bundled_resources, data_path, load_problems, run_problem  # noqa: E402


@pytest.fixture(scope="session")
def res():
    return bundled_resources()


@pytest.fixture(scope="session")
def corpus():
    return load_problems(data_path("corpus.jsonl"))


@pytest.fixture(scope="session")
def outcomes(corpus):
    cfg = Config()
    return {p.id: run_problem(p, cfg) for p in corpus}


@pytest.fixture(scope="session")
def outcomes_no_lexical(corpus):
    cfg = Config(lexical=False)
    return {p.id: run_problem(p, cfg) for p in corpus}


ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
