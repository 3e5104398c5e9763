"""Seeded random plat inputs for fuzzing the pipelines."""
from __future__ import annotations

import numpy as np

from .braid import PlatInput, PureBraidWord, Syllable


def random_word(rng, n, max_len=12, max_exp=2):
    length = int(rng.integers(0, max_len + 1))
    syllables = []
    for _ in range(length):
        i, j = sorted(rng.choice(2 * n, size=2, replace=False) + 1)
        exp = int(rng.integers(1, max_exp + 1)) * int(rng.choice([-1, 1]))
        syllables.append(Syllable(int(i), int(j), exp))
    return PureBraidWord(n, tuple(syllables))


def random_input(rng, max_n=4, max_len=12, max_p=12):
    """A plat input the pipelines accept: p = 0, or 2n-2 < p <= max_p."""
    n = int(rng.integers(1, max_n + 1))
    if rng.random() < 0.5:
        p = 0
    else:
        p = int(rng.integers(2 * n - 1, max_p + 1))
    return PlatInput(random_word(rng, n, max_len), p)


def corpus(count, seed=0, **kwargs):
    rng = np.random.default_rng(seed)
    return [random_input(rng, **kwargs) for _ in range(count)]
