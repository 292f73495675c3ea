"""Deterministic hashing and PRNG primitives.

FNV-1a and splitmix64 are exact integer constructions with no platform or
library dependence, so any independent implementation reproduces the mock
embeddings bit for bit.
"""

import hashlib

MASK64 = (1 << 64) - 1

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def fnv1a64(data: bytes) -> int:
    """64-bit FNV-1a hash of a byte string."""
    h = _FNV_OFFSET
    for byte in data:
        h ^= byte
        h = (h * _FNV_PRIME) & MASK64
    return h


def splitmix64(state: int):
    """Endless stream of 64-bit splitmix64 outputs seeded with `state`."""
    state &= MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        yield z ^ (z >> 31)


def unit_floats(seed: int, count: int) -> list[float]:
    """`count` doubles in [-1, 1), one per splitmix64 step from `seed`."""
    stream = splitmix64(seed)
    return [next(stream) / 2**63 - 1.0 for _ in range(count)]


def text_sha256(text: str) -> str:
    """SHA-256 hex digest of the exact UTF-8 bytes of `text`."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
