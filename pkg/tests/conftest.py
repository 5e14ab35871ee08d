import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

from framedlie.free_lie import GElement, bracket, diamond, g, gen, hall_basis
from framedlie.tensor import TElement, t_word

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))

X, Y, Z, W = (g(gen(i)) for i in range(4))

coefs = st.integers(-4, 4).filter(bool) | st.fractions(-3, 3, max_denominator=4).filter(bool)


@st.composite
def g_trees(draw, n_gens=3, max_depth=2):
    """A GElement built by random bracket/diamond trees over the generators."""
    if max_depth == 0 or draw(st.booleans()):
        return g(gen(draw(st.integers(0, n_gens - 1))), draw(coefs))
    a = draw(g_trees(n_gens, max_depth - 1))
    b = draw(g_trees(n_gens, max_depth - 1))
    return bracket(a, b) if draw(st.booleans()) else diamond(a, b)


@st.composite
def g_sums(draw, n_gens=3, max_depth=2):
    parts = draw(st.lists(g_trees(n_gens, max_depth), min_size=1, max_size=3))
    out = GElement()
    for p in parts:
        out = out + p
    return out


@st.composite
def letters(draw, n_gens=3, max_degree=2):
    pool = [m for d in range(1, max_degree + 1) for m in hall_basis(n_gens, d)]
    return draw(st.sampled_from(pool))


@st.composite
def words(draw, n_gens=3, max_len=3, max_degree=1):
    return tuple(draw(st.lists(letters(n_gens, max_degree), max_size=max_len)))


@st.composite
def t_elements(draw, n_gens=3, max_len=3, max_degree=1):
    out = TElement()
    for w in draw(st.lists(words(n_gens, max_len, max_degree), min_size=1, max_size=3)):
        out = out + t_word(w, draw(coefs))
    return out


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.REPORT:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(acceptance.REPORT):
            terminalreporter.write_line(line)
