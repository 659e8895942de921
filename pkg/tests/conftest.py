import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from alcoves import TYPE_TAGS, group

RANK2_TAGS = ("A1xA1", "A2", "B2", "C2", "G2")
RANK3_TAGS = ("A3", "B3", "C3")

EXPECTED_W0_ORDERS = {
    "A1xA1": 4,
    "A2": 6,
    "B2": 8,
    "C2": 8,
    "G2": 12,
    "A3": 24,
    "B3": 48,
    "C3": 48,
}


@pytest.fixture(params=TYPE_TAGS)
def any_group(request):
    return group(request.param)


@pytest.fixture(params=RANK2_TAGS)
def rank2_group(request):
    return group(request.param)


@pytest.fixture(params=RANK3_TAGS)
def rank3_group(request):
    return group(request.param)
