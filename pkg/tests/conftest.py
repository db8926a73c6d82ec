import pytest

ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """Record one acceptance criterion's outcome for the terminal summary."""
    results = request.config.stash.setdefault(ACCEPTANCE_KEY, {})

    def record(criterion: str, passed: bool, detail: str = "") -> bool:
        results[criterion] = (passed, detail)
        print(f"{criterion}: {'PASS' if passed else 'FAIL'} {detail}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter, config):
    results = config.stash.get(ACCEPTANCE_KEY, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(results):
        passed, detail = results[criterion]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {criterion}  {detail}")
