import itertools

import pytest

_ACCEPTANCE: list[tuple[str, bool, float, str]] = []


def brute_member(gens, x):
    """Membership by listing every coefficient vector with sum(c_i g_i) == x."""
    if x < 0:
        return False
    ranges = [range(x // g + 1) for g in gens]
    return any(sum(c * g for c, g in zip(cs, gens)) == x for cs in itertools.product(*ranges))


@pytest.fixture
def acceptance_log():
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, seconds, detail in _ACCEPTANCE:
        status = "PASS" if ok else "FAIL"
        line = f"{status}  {name}  ({seconds:.2f}s)"
        if detail:
            line += f"  {detail}"
        terminalreporter.write_line(line)
