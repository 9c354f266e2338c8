"""Deterministic 64-bit seed derivation.

All randomized stages consume seeds produced by :func:`mix64` so that
sweeps and retries are reproducible and independent of execution order.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def _avalanche(x: int) -> int:
    # splitmix64 finalizer
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    x = (x ^ (x >> 27)) * 0x94D049BB133111EB & _MASK
    return x ^ (x >> 31)


def mix64(*parts: int | str) -> int:
    """Mix integers and strings into one 64-bit seed.

    The scheme is frozen: each part is serialized (ints as 8 little-endian
    bytes of ``part mod 2**64``, strings as UTF-8), the bytes are folded
    with 64-bit FNV-1a, and the digest is passed through the splitmix64
    finalizer. Identical arguments give identical seeds on every platform.
    """
    h = _FNV_OFFSET
    for part in parts:
        if isinstance(part, str):
            data = part.encode("utf-8")
        else:
            data = (int(part) & _MASK).to_bytes(8, "little")
        for b in data:
            h = (h ^ b) * _FNV_PRIME & _MASK
        h = (h ^ 0xFF) * _FNV_PRIME & _MASK  # part separator
    return _avalanche(h)
