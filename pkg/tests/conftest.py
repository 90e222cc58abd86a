import itertools

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "permutrees",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("permutrees")


def all_words(n, alphabet="odub"):
    return ["".join(w) for w in itertools.product(alphabet, repeat=n)]


@st.composite
def decorated_permutations(draw, min_n=1, max_n=6):
    """A permutation together with a decoration of the same length."""
    n = draw(st.integers(min_n, max_n))
    perm = tuple(draw(st.permutations(range(1, n + 1))))
    word = draw(st.text(alphabet="odub", min_size=n, max_size=n))
    return perm, word


def decorations(min_n=1, max_n=6):
    return st.integers(min_n, max_n).flatmap(lambda n: st.text(alphabet="odub", min_size=n, max_size=n))


@pytest.fixture(scope="session")
def words_up_to_4():
    return [w for n in range(1, 5) for w in all_words(n)]


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance lines at the end, where captured output would hide them."""
    lines = {}
    for key in ("passed", "failed"):
        for report in terminalreporter.stats.get(key, []):
            for name, value in getattr(report, "user_properties", []):
                if name == "acceptance":
                    lines[value[0]] = value[1]
    if lines:
        terminalreporter.section("acceptance criteria")
        for k in sorted(lines):
            terminalreporter.write_line(lines[k])
