import pytest

ACCEPTANCE_LINES: list = []


def pytest_addoption(parser):
    parser.addoption("--allow-large", action="store_true", default=False, help="run the degree-6 rank table")


@pytest.fixture
def allow_large(request):
    return request.config.getoption("--allow-large")


@pytest.fixture
def record():
    def emit(number, ok, detail):
        line = f"criterion {number:>2}: {'SKIP' if ok is None else ('PASS' if ok else 'FAIL')}  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
