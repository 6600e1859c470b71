import os

import pytest

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "fixtures")


@pytest.fixture(scope="session")
def fixture_n9_path() -> str:
    return os.path.join(FIXTURES, "curve_n9.json")
