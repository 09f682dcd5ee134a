import json
from pathlib import Path

import pytest

from morphweave.gateway import Gateway, ReplayCache
from morphweave.patterns import load_pattern_dir
from morphweave.pipeline import load_labels
from morphweave.sandbox import InlineSandbox

REPO = Path(__file__).resolve().parents[1]
FIXTURES = REPO / "fixtures"

# the summation idiom and its classic indexed rewrite, used all over
SUM_LHS = "result = 0\nfor elem in elements:\n    result = elem + result"
SUM_RHS = "result = numpy.sum(elements)"
INDEXED_SUM = "loss = 0\nfor i in range(len(losses)):\n    loss += losses[i]"
SORTED_SUM = "result = 0\nfor i in sorted(elements):\n    result += i"
CUMULATIVE_SUM = ("temp_list = [0] + int_list\nfor i in range(1, len(temp_list)):\n"
                  "    temp_list[i] += temp_list[i - 1]\ncount = temp_list[-1]")

SUM_RULE_TEXT = """\
:[[v0]] = 0
for :[[v1]] in :[[v2]]:
    :[[v0]] = :[[v1]] + :[[v0]]
=>
:[[v0]] = numpy.sum(:[[v2]])
"""

INDEXED_SUM_RULE_TEXT = """\
:[[v0]] = 0
for :[[v1]] in range(len(:[[v2]])):
    :[[v0]] += :[[v2]][:[[v1]]]
=>
:[[v0]] = numpy.sum(:[[v2]])
guard :[[v2]] type List[int]
"""


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    assert FIXTURES.is_dir(), "run tools/make_fixtures.py first"
    return FIXTURES


@pytest.fixture(scope="session")
def patterns(fixtures_dir):
    return {p.id: p for p in load_pattern_dir(fixtures_dir / "cpats")}


@pytest.fixture(scope="session")
def sum_pattern(patterns):
    return patterns["cpat-01"]


@pytest.fixture(scope="session")
def replay_gateway(fixtures_dir):
    return Gateway(ReplayCache(fixtures_dir / "replay_cache.json"), mode="replay")


@pytest.fixture(scope="session")
def labels(fixtures_dir):
    return load_labels(fixtures_dir / "labels.json")


@pytest.fixture(scope="session")
def table_rows():
    rows = {}
    for num, row in {
        1: (1185, 291, 83, 50, 17, 196),
        2: (1201, 478, 119, 110, 51, 201),
        3: (782, 287, 107, 66, 10, 141),
        4: (285, 101, 20, 10, 2, 12),
        5: (1265, 416, 150, 75, 9, 125),
        6: (927, 425, 202, 85, 11, 106),
        7: (1223, 290, 95, 80, 3, 68),
        8: (177, 28, 26, 24, 16, 208),
        9: (64, 11, 11, 9, 5, 36),
        10: (955, 453, 226, 71, 23, 907),
    }.items():
        rows[f"cpat-{num:02d}"] = row
    return rows


@pytest.fixture()
def sandbox():
    return InlineSandbox()


@pytest.fixture(scope="session")
def type_stubs(fixtures_dir):
    return json.loads((fixtures_dir / "corpus" / "type_stubs.json").read_text())
