"""Hypothesis strategies for ring elements and small additive codes"""

from hypothesis import strategies as st

from z2s_simplex.additive import AdditiveCode, GeneratorMatrix


@st.composite
def ring_pairs(draw, s_min=1, s_max=6):
    s = draw(st.integers(s_min, s_max))
    q = 1 << s
    return s, draw(st.integers(0, q - 1)), draw(st.integers(0, q - 1))


@st.composite
def additive_codes(draw, s_values=(2, 3), max_n=6, max_rows=3):
    s = draw(st.sampled_from(s_values))
    n = draw(st.integers(1, max_n))
    rows = draw(st.integers(1, max_rows))
    entries = draw(st.lists(
        st.lists(st.integers(0, (1 << s) - 1), min_size=n, max_size=n),
        min_size=rows,
        max_size=rows,
    ))
    return AdditiveCode(GeneratorMatrix(s, entries))
