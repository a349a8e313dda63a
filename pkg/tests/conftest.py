import pytest

from helpers import build


@pytest.fixture
def four_cycle():
    # two bottoms, two tops, all four edges; every link on both sides is internal
    return build([("A", "i"), ("A", "j"), ("B", "i"), ("B", "j")])


@pytest.fixture
def covered_hub():
    """Top hub i over bottoms A..D, plus one pairing top for each of A-B,
    A-C, A-D.  All of A's links and the three pairing links are
    bottom-internal; deleting (A, i) makes the pairing links load-bearing."""
    return build(
        [
            ("A", "i"),
            ("B", "i"),
            ("C", "i"),
            ("D", "i"),
            ("A", "j"),
            ("B", "j"),
            ("A", "k"),
            ("C", "k"),
            ("A", "l"),
            ("D", "l"),
        ]
    )
