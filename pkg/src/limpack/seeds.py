"""Seed derivation.

Every random stream is a numpy ``PCG64`` bit generator seeded through
``numpy.random.SeedSequence``.  Child seeds are derived as::

    derive_seed(master, *keys) = SeedSequence([master, *words(keys)]).generate_state(1, uint64)[0]

where integer keys are used as-is (they must be non-negative) and string keys
are mapped to a 64-bit word with BLAKE2b (8-byte digest, little endian).  Both
SeedSequence and PCG64 are specified bit-exactly by numpy, so streams are
reproducible across platforms.
"""

from __future__ import annotations

import hashlib

import numpy as np

MASK64 = (1 << 64) - 1


def _word(key: int | str) -> int:
    if isinstance(key, str):
        return int.from_bytes(hashlib.blake2b(key.encode("utf-8"), digest_size=8).digest(), "little")
    if key < 0:
        raise ValueError("seed keys must be non-negative")
    return int(key)


def derive_seed(master: int, *keys: int | str) -> int:
    words = [_word(master & MASK64)] + [_word(k) for k in keys]
    ss = np.random.SeedSequence(words)
    return int(ss.generate_state(1, np.uint64)[0])


def rng(seed: int) -> np.random.Generator:
    if not 0 <= seed <= MASK64:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return np.random.Generator(np.random.PCG64(seed))
