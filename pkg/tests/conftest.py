from fractions import Fraction

from hypothesis import strategies as st

small_q = st.fractions(min_value=-4, max_value=4, max_denominator=4)
small_int = st.integers(min_value=-6, max_value=6)


def matrices(max_rows=4, max_cols=4, elements=small_q):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(elements, min_size=c, max_size=c), min_size=r, max_size=r)))


def points(d, n, coords=small_int):
    return st.lists(st.tuples(*[coords] * d), min_size=n, max_size=n, unique=True).map(
        lambda ps: {k + 1: tuple(Fraction(x) for x in p) for k, p in enumerate(ps)})
