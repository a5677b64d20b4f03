"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""
import pytest

_OUTCOMES: dict[int, tuple[str, str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    note = getattr(item, "acceptance_note", "")
    _OUTCOMES[number] = ("FAIL" if call.excinfo else "PASS", title, note)


@pytest.fixture
def note(request):
    """Attach a short summary (counts, timings) to the criterion line."""

    def _note(text: str) -> None:
        request.node.acceptance_note = text

    return _note


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        status, title, extra = _OUTCOMES[number]
        line = f"criterion {number}: {status}  {title}"
        terminalreporter.write_line(line + (f"  [{extra}]" if extra else ""))
