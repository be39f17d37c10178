import random

from hypothesis import settings, strategies as st

from cmatch import Graph

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 10):
    """Arbitrary labeled graphs, edges drawn as a subset of the pair list."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not pairs:
        return Graph.from_edges(n, [])
    chosen = draw(st.sets(st.sampled_from(pairs)))
    return Graph.from_edges(n, sorted(chosen))


@st.composite
def alpha2_graphs(draw, min_n: int = 1, max_n: int = 11):
    """Graphs without independent triples, via the seeded generator.

    The generator itself is oracle-tested in test_generators.py, so leaning
    on it here is not circular.
    """
    from cmatch import random_alpha2

    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**16))
    density = draw(st.sampled_from((0.0, 0.2, 0.5, 0.8)))
    return random_alpha2(n, seed, density)


def seeded_rng(seed: int = 0) -> random.Random:
    return random.Random(seed)
