from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from akzeta.exact import GaussianRational
from akzeta.moebius import ONE, Matrix2, act

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_gaussians = st.builds(GaussianRational, small_fractions, small_fractions)
small_ints = st.integers(min_value=-4, max_value=4)


@st.composite
def exact_matrices(draw, gaussian: bool = True):
    """Invertible exact matrices with g(1) != 1, so that the exact grid exists."""
    entry = st.builds(GaussianRational, small_ints, small_ints if gaussian else st.just(0))
    a, b, c, d = (draw(entry) for _ in range(4))
    from hypothesis import assume

    assume(a * d - b * c != 0)
    g = Matrix2(a, b, c, d)
    assume(act(g, ONE) != ONE)
    return g


def frac(p, q=1):
    return Fraction(p, q)
