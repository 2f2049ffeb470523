import os
import sys

from hypothesis import HealthCheck, settings, strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from magmahopf.algebra import Poly  # noqa: E402
from magmahopf.magma import graft, leaf  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def trees(variables=(1, 2), max_degree=5):
    """Random monomials of degree <= max_degree."""

    @st.composite
    def build(draw, n=None):
        if n is None:
            n = draw(st.integers(1, max_degree))
        if n == 1:
            return leaf(draw(st.sampled_from(variables)))
        k = draw(st.integers(1, n - 1))
        return graft(draw(build(k)), draw(build(n - k)))

    return build()


def trees_of_degree(n, variables=(1, 2)):
    @st.composite
    def build(draw, m=n):
        if m == 1:
            return leaf(draw(st.sampled_from(variables)))
        k = draw(st.integers(1, m - 1))
        return graft(draw(build(k)), draw(build(m - k)))

    return build()


coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=6).filter(lambda c: c != 0)


def polys(variables=(1, 2), max_degree=5, max_terms=5):
    return st.dictionaries(trees(variables, max_degree), coefficients, max_size=max_terms).map(Poly)


def homogeneous_polys(n, variables=(1, 2), max_terms=4):
    return st.dictionaries(trees_of_degree(n, variables), coefficients, min_size=1, max_size=max_terms).map(Poly)
