import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from ptolemy_dn.polygon import Diagram, full_alphabet, full_mask, nc_mask

settings.register_profile(
    "default", deadline=None, max_examples=150, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", deadline=None, max_examples=40)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ranks = st.integers(min_value=4, max_value=7)


@st.composite
def diagrams(draw, n=None):
    n = draw(ranks) if n is None else n
    mask = draw(st.integers(min_value=0, max_value=full_mask(n)))
    return Diagram.from_mask(n, mask)


@st.composite
def elements(draw, n=None):
    n = draw(ranks) if n is None else n
    return draw(st.sampled_from(full_alphabet(n)))


@st.composite
def noncrossing_diagrams(draw, n=None):
    """Greedy non-crossing diagram grown from a random element order."""
    n = draw(ranks) if n is None else n
    order = draw(st.permutations(range(n * n)))
    limit = draw(st.integers(min_value=0, max_value=n * n))
    mask = 0
    for i in order[:limit]:
        bit = 1 << i
        if nc_mask(n, bit) & mask == mask and nc_mask(n, mask) & bit:
            mask |= bit
    return Diagram.from_mask(n, mask)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import ACCEPTANCE_LINES
    except ImportError:
        return
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
