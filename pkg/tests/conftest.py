import sys
from pathlib import Path

import pytest

from propval import Project

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def project_a():
    return Project("A", (-1000, 200, 200, 1200))


@pytest.fixture
def project_b():
    return Project("B", (-1000, 500, 500, 500))


@pytest.fixture
def project_c():
    # interest-only flows at 12% with the principal returned at the end
    return Project("C", (-1000, 120, 120, 1120))


@pytest.fixture
def project_d():
    return Project("D", (-1000, 1450, 1500, -2200))
