import itertools

import pytest

from twobridge.conway import ConwayNotation


def notation_corpus(c_min=2, c_max=12, m_max=5):
    """Every notation with odd m <= m_max and c_min <= sum(a_i) <= c_max."""
    out = []
    for c in range(c_min, c_max + 1):
        for m in (1, 3, 5):
            if m > m_max or m > c:
                continue
            for cut in itertools.combinations(range(1, c), m - 1):
                parts, prev = [], 0
                for x in cut + (c,):
                    parts.append(x - prev)
                    prev = x
                out.append(ConwayNotation(tuple(parts)))
    return out


@pytest.fixture(scope="session")
def corpus_c12():
    return notation_corpus(2, 12)


@pytest.fixture(scope="session")
def corpus_c10():
    return notation_corpus(2, 10)
