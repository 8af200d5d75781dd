import pytest

from hopfcheck import run_pipeline, standard_zoo


@pytest.fixture(scope="session")
def zoo():
    return {h.name: h for h in standard_zoo()}


@pytest.fixture(scope="session")
def pipelines(zoo):
    """One full verification run per zoo algebra, shared across the suite."""
    return {name: run_pipeline(h) for name, h in zoo.items()}


def checks_by_name(result):
    return {c.name: c for c in result.checks}
