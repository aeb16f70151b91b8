"""Hypothesis strategies and brute-force oracles shared across test modules."""

import random
from math import gcd

from hypothesis import strategies as st

from birburn.toric import P2, Embedding, hirzebruch
from birburn.verify import random_word


@st.composite
def fans(draw, max_len=6):
    rng = random.Random(draw(st.integers(0, 2**32)))
    start = draw(st.sampled_from([P2, hirzebruch(0), hirzebruch(1), hirzebruch(3)]))
    _, f = random_word(rng, start, draw(st.integers(0, max_len)))
    return f


@st.composite
def embeddings(draw, max_N=12):
    N = draw(st.integers(1, max_N))
    while True:
        p, q = draw(st.integers(0, N - 1)), draw(st.integers(0, N - 1))
        if gcd(gcd(p, q), N) == 1:
            return Embedding(N, p, q)


def stabilizer_by_search(v, e):
    """Order of {k : k(p, q) = t v mod N for some t}, by exhaustion."""
    N = e.N
    line = {((t * v[0]) % N, (t * v[1]) % N) for t in range(N)}
    return sum(1 for k in range(N) if ((k * e.p) % N, (k * e.q) % N) in line)
