from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import pytest

from datalake_agent.schemafixtures import FixtureManifest, TaskSpec, generate_all
from datalake_agent.solvers import PromptSet


@dataclass
class Universe:
    root: Path
    manifest: FixtureManifest
    tasks: list[TaskSpec]


@pytest.fixture(scope="session")
def universe(tmp_path_factory) -> Universe:
    """Fixtures generated once per session with seed 0."""
    root = tmp_path_factory.mktemp("fixtures")
    manifest, tasks = generate_all(0, root)
    return Universe(root, manifest, tasks)


@pytest.fixture(scope="session")
def catalogs(universe):
    return {s: universe.manifest.load_catalog(s) for s in ("small", "medium", "large")}


@pytest.fixture(scope="session")
def small(catalogs):
    return catalogs["small"]


@pytest.fixture(scope="session")
def prompts() -> PromptSet:
    return PromptSet.load()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
