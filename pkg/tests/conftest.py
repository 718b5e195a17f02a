import pytest

from dihedral_linking import load_scene

import goldens


@pytest.fixture(scope="session")
def part1():
    return load_scene(goldens.PART1)


@pytest.fixture(scope="session")
def part1_omega1():
    return load_scene(goldens.PART1_OMEGA1)


@pytest.fixture(scope="session")
def part1_omega2():
    return load_scene(goldens.PART1_OMEGA2)


@pytest.fixture(scope="session")
def part2():
    return load_scene(goldens.PART2)


@pytest.fixture(scope="session")
def trefoil():
    return load_scene(goldens.TREFOIL)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
