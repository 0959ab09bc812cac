import random
import sys

import pytest

from algiso import GF, MSC, QQ, in_v0
from algiso.frame import build_frame
from algiso.normalize import normalize
from algiso.errors import FrameDeficient
from algiso.oracle import random_algebra, random_gl

FIELDS = [QQ, GF(3), GF(5), GF(7)]


def direct_sum(field):
    """F (+) F: e1 e1 = e1, e2 e2 = e2, mixed products zero."""
    return MSC.from_table(field, 2, {(0, 0): [1, 0], (1, 1): [0, 1]})


def dual_numbers(field):
    """e1 is the unit, e2^2 = 0."""
    return MSC.from_table(
        field, 2, {(0, 0): [1, 0], (0, 1): [0, 1], (1, 0): [0, 1]}
    )


def sample_in_v0(m, field, rng, with_frame=False, bound=None):
    while True:
        A = random_algebra(m, field, rng, bound)
        if not in_v0(A):
            continue
        if with_frame:
            try:
                build_frame(normalize(A).Abar)
            except FrameDeficient:
                continue
        return A


@pytest.fixture
def rng():
    return random.Random(20261018)


@pytest.fixture(params=FIELDS, ids=repr)
def field(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[number])
