import pytest

# criterion number -> (label, passed, detail)
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record(num: int, label: str, passed: bool, detail: str = "") -> None:
    ACCEPTANCE[num] = (label, passed, detail)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        label, ok, detail = ACCEPTANCE[num]
        tr.write_line(f"[{'PASS' if ok else 'FAIL'}] {num}. {label}" + (f" :: {detail}" if detail else ""))


@pytest.fixture
def tmpcwd(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path
