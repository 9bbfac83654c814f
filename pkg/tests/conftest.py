import pytest
from hypothesis import strategies as st

from sbitlab import SbitWord
from sbitlab.core import Sbit


def sbits(basis_only=False):
    return st.sampled_from([Sbit.ZERO, Sbit.ONE] if basis_only else list(Sbit))


def words(min_size=1, max_size=6, basis_only=False):
    return st.lists(sbits(basis_only), min_size=min_size, max_size=max_size).map(
        lambda xs: SbitWord(tuple(xs))
    )


@pytest.fixture
def tmp_file(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


# Filled by test_acceptance.py: (number, title, passed, detail).
ACCEPTANCE_RESULTS: list[tuple[int, str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, title, passed, detail in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {num:2d}: {title} ({detail})")
