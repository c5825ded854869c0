from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-9, max_value=9, max_denominator=9)
nonzero_rationals = small_rationals.filter(lambda x: x != 0)


@st.composite
def invertible_2x2(draw):
    m = draw(st.lists(small_rationals, min_size=4, max_size=4).filter(lambda v: v[0] * v[3] - v[1] * v[2] != 0))
    return ((m[0], m[1]), (m[2], m[3]))


@st.composite
def binary_forms(draw, min_degree=1, max_degree=5):
    from quadpencil.algebra.forms import BinaryForm

    d = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(small_rationals, min_size=d + 1, max_size=d + 1).filter(any))
    return BinaryForm(d, tuple(coeffs))


def frac_rows(rows):
    return tuple(tuple(Fraction(x) for x in r) for r in rows)
