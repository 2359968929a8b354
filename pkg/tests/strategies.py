from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from dextral.exactlin import QQ, FieldSpec

small_int = st.integers(min_value=-3, max_value=3)
fractions = st.builds(Fraction, st.integers(-50, 50), st.integers(1, 20))
fields = st.sampled_from([QQ, FieldSpec.prime(2), FieldSpec.prime(3), FieldSpec.prime(5)])


def vectors(n: int):
    return st.lists(small_int, min_size=n, max_size=n).map(tuple)
