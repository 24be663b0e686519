import pytest
from hypothesis import settings

settings.register_profile('default', deadline=None)
settings.load_profile('default')

_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line: ``criterion(name, ok, detail)``, then assert ok."""
    def record(name: str, ok: bool, detail: str = ''):
        _RESULTS.append((name, ok, detail))
        print(f'[{"PASS" if ok else "FAIL"}] {name}: {detail}')
        assert ok, f'{name}: {detail}'
    return record


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section('acceptance criteria')
    for name, ok, detail in _RESULTS:
        terminalreporter.write_line(f'[{"PASS" if ok else "FAIL"}] {name}: {detail}')
