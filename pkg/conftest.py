import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from poset_core import BoxShape  # noqa: E402


@pytest.fixture
def box38():
    return BoxShape(3, 8)


@pytest.fixture
def box44():
    return BoxShape(4, 4)


@pytest.fixture
def golden_dir():
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), "tests", "golden")
