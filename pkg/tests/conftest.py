import itertools

from hypothesis import settings, strategies as st

from edgedepth.monomials import Monomial, ideal_from_exponents

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


def exps(n, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


@st.composite
def small_ideals(draw, n=None, max_exp=3, max_gens=4):
    """Nonzero proper monomial ideals on n <= 4 variables."""
    n = n or draw(st.integers(1, 4))
    gens = draw(st.lists(exps(n, max_exp).filter(any), min_size=1, max_size=max_gens))
    return ideal_from_exponents(gens, n)


@st.composite
def ideal_and_monomial(draw, max_exp=3):
    I = draw(small_ideals(max_exp=max_exp))
    m = Monomial(draw(exps(I.ambient_n, max_exp)))
    return I, m


def divisor_box(top):
    """Every exponent vector componentwise <= top."""
    return itertools.product(*[range(t + 1) for t in top])


# one line per acceptance criterion, printed in the terminal summary
CRITERIA: dict[int, str] = {}


def record_criterion(k: int, ok: bool, detail: str):
    line = f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    CRITERIA[k] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for k in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[k])
