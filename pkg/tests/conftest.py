from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from nckleinian.exact import Polynomial, RationalFunction
from nckleinian.skew import GroupElement, SkewElement

settings.register_profile(
    "default", deadline=None, max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# t^4; t^4+t+1; t^5-2t^3+7; t^4-5t^2+4; t^6+t
BATTERY = [
    Polynomial([0, 0, 0, 0, 1]),
    Polynomial([1, 1, 0, 0, 1]),
    Polynomial([7, 0, 0, -2, 0, 1]),
    Polynomial([4, 0, -5, 0, 1]),
    Polynomial([0, 1, 0, 0, 0, 0, 1]),
]
BATTERY_IDS = ["t4", "t4+t+1", "t5-2t3+7", "t4-5t2+4", "t6+t"]


@pytest.fixture(params=BATTERY, ids=BATTERY_IDS)
def q(request):
    return request.param


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def polynomials(draw, max_degree=4):
    return Polynomial(draw(st.lists(fractions, max_size=max_degree + 1)))


@st.composite
def nonzero_polynomials(draw, max_degree=3):
    p = draw(polynomials(max_degree))
    return p if p else Polynomial([draw(fractions.filter(bool))])


@st.composite
def ratfuns(draw):
    return RationalFunction(draw(polynomials(3)), draw(nonzero_polynomials(2)))


@st.composite
def group_elements(draw):
    return GroupElement(draw(st.integers(-2, 2)), draw(st.integers(0, 1)))


@st.composite
def skew_elements(draw, max_terms=3):
    terms = draw(st.dictionaries(group_elements(), ratfuns(), max_size=max_terms))
    return SkewElement(terms)


@st.composite
def even_polynomials(draw, max_half_degree=4):
    p = draw(polynomials(max_half_degree))
    return p.compose_square()


words = st.text(alphabet="uvw", max_size=6)


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("tests.test_acceptance")
    results = getattr(module, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
