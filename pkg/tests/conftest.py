from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from skeintorus.laurent import LaurentPolynomial
from skeintorus.quantum_torus import CosineElement, TorusElement
from skeintorus.solid_torus import SolidTorusElement

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_int = st.integers(-3, 3)
coefficient = st.one_of(small_int, st.fractions(-3, 3, max_denominator=4).map(Fraction))


def laurent(max_terms=4, exps=(-6, 6), coeffs=small_int):
    return st.dictionaries(st.integers(*exps), coeffs, max_size=max_terms).map(LaurentPolynomial)


def nonzero_laurent(**kw):
    return laurent(**kw).filter(bool)


def torus(max_terms=3, bound=3):
    key = st.tuples(st.integers(-bound, bound), st.integers(-bound, bound))
    return st.dictionaries(key, laurent(max_terms=2, exps=(-3, 3)), max_size=max_terms).map(TorusElement)


def cosines(max_terms=3, bound=3):
    key = st.tuples(st.integers(0, bound), st.integers(-bound, bound))
    return st.dictionaries(key, laurent(max_terms=2, exps=(-3, 3)), max_size=max_terms).map(CosineElement)


def solid(basis="S", max_deg=4):
    return st.dictionaries(
        st.integers(0, max_deg), laurent(max_terms=2, exps=(-3, 3)), max_size=3
    ).map(lambda d: SolidTorusElement(basis, d))


_ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_report():
    """Record one PASS/FAIL line; all lines are printed in the terminal summary."""
    def record(line):
        print(line)
        _ACCEPTANCE_LINES.append(line)
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
