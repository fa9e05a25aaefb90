"""Seeded, platform-independent random streams.

Every random draw in panelcross goes through numpy's PCG64 generator seeded
by a SeedSequence, so a given seed produces the same bits everywhere.
A tuple seed such as ``(seed, index)`` selects an independent substream.
"""
from typing import Sequence, Union

import numpy as np

Seed = Union[int, Sequence[int]]


def make_generator(seed: Seed) -> np.random.Generator:
    entropy = [int(x) for x in seed] if isinstance(seed, (tuple, list)) else int(seed)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))
