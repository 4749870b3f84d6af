import pytest

from sqwalk.lattice import LatticeSpec

CONFIGS = [
    ("torus", "axis"),
    ("klein", "axis"),
    ("rp2", "axis"),
    ("torus", "interleaved"),
    ("sphere", "axis"),
]


@pytest.fixture(params=CONFIGS, ids=lambda c: f"{c[0]}-{c[1]}")
def config(request):
    return request.param


def spec_for(config, d, **kw):
    return LatticeSpec(d, config[0], config[1], **kw)


ACCEPTANCE_LINES: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
