"""Deterministic RNG substreams derived from a single master seed."""

import zlib

import numpy as np


def substream(seed, *path):
    """Return a Generator for a named substream of the master seed.

    Path elements may be non-negative ints or short strings; strings are
    mapped to stable integers with crc32 so the stream layout is
    reproducible across runs and platforms. Distinct paths give
    statistically independent streams.
    """
    key = []
    for p in path:
        if isinstance(p, str):
            key.append(zlib.crc32(p.encode("utf-8")))
        else:
            p = int(p)
            if p < 0:
                raise ValueError("substream path ints must be non-negative")
            key.append(p)
    seq = np.random.SeedSequence(entropy=int(seed), spawn_key=tuple(key))
    return np.random.default_rng(seq)
