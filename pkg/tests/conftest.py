import pytest

SAMPLE = (b"It was the best of times, it was the worst of times, it was the age of "
          b"wisdom, it was the age of foolishness, it was the epoch of belief.\n")


@pytest.fixture
def small_corpus(tmp_path):
    root = tmp_path / "corpus"
    root.mkdir()
    (root / "b.txt").write_bytes(SAMPLE * 30)
    (root / "a.txt").write_bytes(SAMPLE.upper() * 10 + SAMPLE * 5)
    (root / "c.bin").write_bytes(bytes(range(256)) * 8)
    return root


ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_RESULTS


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    by_criterion = {}
    for criterion, label, ok, detail in ACCEPTANCE_RESULTS:
        by_criterion.setdefault(criterion, []).append(ok)
        tr.write_line(f"  [{'pass' if ok else 'FAIL'}] C{criterion} {label}: {detail}")
    for criterion in sorted(by_criterion):
        verdict = "PASS" if all(by_criterion[criterion]) else "FAIL"
        tr.write_line(f"CRITERION {criterion}: {verdict}")
