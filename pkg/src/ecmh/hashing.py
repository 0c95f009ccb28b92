"""Keyed intermediate hashing with arbitrary output length.

The default algorithm is BLAKE2: BLAKE2s for requests up to 32 bytes and
BLAKE2b above that, extended past 64 bytes by counter-mode blocks (the
block counter goes into the `person` parameter, so each block is an
independent keyed hash of the same message).  Constructions that need a
different intermediate hash can pass any callable with the same
signature.
"""

from __future__ import annotations

import hashlib

BLAKE2S_MAX_KEY = 32
BLAKE2B_MAX_KEY = 64


def blake2_xof(data: bytes, nbytes: int, key: bytes = b"") -> bytes:
    """Keyed BLAKE2 digest of `data`, exactly `nbytes` long."""
    if nbytes <= 32:
        return hashlib.blake2s(data, key=key, digest_size=nbytes).digest()
    if nbytes <= 64:
        return hashlib.blake2b(data, key=key, digest_size=nbytes).digest()
    blocks = []
    for counter in range(-(-nbytes // 64)):
        blocks.append(hashlib.blake2b(
            data, key=key, digest_size=64,
            person=counter.to_bytes(8, "little")).digest())
    return b"".join(blocks)[:nbytes]


def max_key_len(nbytes: int) -> int:
    """Longest key blake2_xof supports for the given output length."""
    return BLAKE2S_MAX_KEY if nbytes <= 32 else BLAKE2B_MAX_KEY
