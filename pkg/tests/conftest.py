import random

import pytest
from hypothesis import strategies as st

from trivknot.codes import GaussCode, Pass, ProjectionWord


def two_bridge_signature_oracle(p: int, q: int) -> int:
    """|signature| of the 2-bridge knot b(p, q) by the classical floor sum.

    Independent of diagrams: only the continued fraction enters.
    """
    q %= p
    if q % 2 == 0:
        q = p - q
    return abs(sum((-1) ** ((i * q) // p) for i in range(1, p)))


def random_word(rng: random.Random, n: int) -> tuple[int, ...]:
    symbols = [s for s in range(1, n + 1) for _ in range(2)]
    rng.shuffle(symbols)
    return tuple(symbols)


@st.composite
def words(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    symbols = [s for s in range(1, n + 1) for _ in range(2)]
    return ProjectionWord(tuple(draw(st.permutations(symbols))))


@st.composite
def codes(draw, max_n=10):
    word = draw(words(max_n))
    over_first = {s: draw(st.booleans()) for s in set(word.symbols)}
    sign = {s: draw(st.sampled_from((1, -1))) for s in set(word.symbols)}
    seen = set()
    passes = []
    for s in word.symbols:
        passes.append(Pass(s, over_first[s] if s not in seen else not over_first[s], sign[s]))
        seen.add(s)
    return GaussCode(tuple(passes))


@pytest.fixture
def trefoil_text():
    return "O1+ U2+ O3+ U1+ O2+ U3+"
