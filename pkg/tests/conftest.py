import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from bifrost import bifrost  # noqa: E402
from mimir.catalog import catalog_groupoids  # noqa: E402
from vedrfolnir import dbClient  # noqa: E402


@pytest.fixture
def config():
    return dict(bifrost.DEFAULTS, workers=2)


@pytest.fixture
def catalog():
    return {e.name: e.groupoid for e in catalog_groupoids(3)}


@pytest.fixture
def fresh_ledger(tmp_path):
    """A dbClient bound to a temporary file; the singleton is reset around the test."""
    dbClient._instance = None
    db = dbClient({"ledger_path": str(tmp_path / "ledger.db")})
    yield db
    dbClient._instance = None
