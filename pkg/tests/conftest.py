import numpy as np
import pytest

from hypersample import HypergraphInstance


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def six_ones():
    return HypergraphInstance((1,) * 6, 3)


@pytest.fixture
def two_two_two():
    return HypergraphInstance((2, 2, 2), 3)


@pytest.fixture
def mixed():
    # |B| = 93, |B*| = 90, |H| = 15
    return HypergraphInstance((2, 2, 2, 1, 1, 1), 3)


_VERDICTS = pytest.StashKey[list]()


@pytest.fixture
def criterion(request):
    """Record one acceptance verdict line; shown in the terminal summary."""
    lines = request.config.stash.setdefault(_VERDICTS, [])

    def record(number, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
        print(line)
        lines.append(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_VERDICTS, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
