"""Seeded random diagrams and codes for property tests and verification."""

from __future__ import annotations

import random

from .codec import OrientedPDCode
from .construct import add_curl, braid_closure
from .diagram import Diagram


def random_braid_diagram(rng: random.Random, max_crossings: int = 12) -> Diagram:
    """A connected braid closure with at most ``max_crossings`` crossings."""
    while True:
        strands = rng.choice((2, 2, 2, 3, 3, 4))
        length = rng.randint(strands - 1, max_crossings)
        word = [
            rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
        ]
        if {abs(x) for x in word} == set(range(1, strands)):
            return braid_closure(word, strands)


def random_diagram(rng: random.Random, max_crossings: int = 12) -> Diagram:
    """A braid closure with a few random curls thrown in."""
    d = random_braid_diagram(rng, max_crossings)
    for _ in range(rng.randint(0, 2)):
        if d.crossing_count >= max_crossings:
            break
        arc = rng.choice(d.arc_labels)
        d = add_curl(
            d,
            arc,
            first_pass_under=rng.random() < 0.5,
            positive=rng.random() < 0.5,
        )
    return d


def random_code(rng: random.Random, max_crossings: int = 12) -> OrientedPDCode:
    return random_diagram(rng, max_crossings).to_code()
