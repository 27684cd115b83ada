from hypothesis import strategies as st

sides = st.integers(min_value=1, max_value=4)


@st.composite
def box_pairs(draw, max_dim=3, max_side=4):
    l = draw(st.integers(min_value=1, max_value=max_dim))
    side = st.integers(min_value=1, max_value=max_side)
    x = tuple(draw(st.lists(side, min_size=l, max_size=l)))
    y = tuple(draw(st.lists(side, min_size=l, max_size=l)))
    return x, y


@st.composite
def partition_pairs(draw, max_len=3, max_part=4):
    l = draw(st.integers(min_value=1, max_value=max_len))
    part = st.integers(min_value=1, max_value=max_part)
    lam = tuple(sorted(draw(st.lists(part, min_size=l, max_size=l)), reverse=True))
    mu = tuple(sorted(draw(st.lists(part, min_size=l, max_size=l)), reverse=True))
    return lam, mu
