import random

from hypothesis import strategies as st

from finitop import FinSpace


@st.composite
def spaces(draw, min_n=1, max_n=6):
    """Random preorder: a random relation closed under transitivity."""
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    density = draw(st.sampled_from([0.1, 0.25, 0.5]))
    rng = random.Random(seed)
    pairs = [(x, y) for x in range(n) for y in range(n) if x != y and rng.random() < density]
    return FinSpace.from_pairs(n, pairs, close=True)


@st.composite
def spaces_with_subset(draw, max_n=6):
    X = draw(spaces(max_n=max_n))
    S = draw(st.frozensets(st.integers(0, X.n - 1)))
    return X, S
