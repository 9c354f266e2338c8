"""Derandomized vertex sampling from a 4-wise independent family.

A uniformly random degree-3 polynomial over GF(2^k) evaluated at distinct
field points gives 4-wise independent uniform values; thresholding the
value at ``floor(p * 2**k)`` turns them into 4-wise independent inclusion
indicators with probability within ``2**-k`` of ``p``. Exhaustive
enumeration of coefficient tuples is a grading tool, not the default
execution path, so the field stays small.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .graph import Graph, VertexSet

# Primitive polynomials over GF(2), one per degree, as bit masks including
# the leading term. Primitivity (x generates the multiplicative group) is
# verified when the log/exp tables are built.
IRREDUCIBLE_POLYS: dict[int, int] = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10000000000101101,
}


@dataclass(frozen=True)
class BinaryField:
    """GF(2^bits) with multiplication modulo a fixed primitive polynomial."""

    bits: int

    def __post_init__(self):
        if self.bits not in IRREDUCIBLE_POLYS:
            supported = max(IRREDUCIBLE_POLYS)
            raise ValueError(f"field size 2^{self.bits} unsupported (max 2^{supported})")

    @property
    def order(self) -> int:
        return 1 << self.bits

    @property
    def modulus(self) -> int:
        return IRREDUCIBLE_POLYS[self.bits]

    def mul(self, a: int, b: int) -> int:
        """Carry-less multiply with reduction (Russian peasant)."""
        acc = 0
        top = 1 << self.bits
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= self.modulus
        return acc

    @classmethod
    def for_size(cls, n: int) -> "BinaryField":
        """Smallest supported field with at least ``n`` elements."""
        if n < 1:
            raise ValueError("need at least one element")
        bits = max(1, (n - 1).bit_length())
        return cls(bits)


@lru_cache(maxsize=None)
def _log_exp_tables(bits: int) -> tuple[np.ndarray, np.ndarray]:
    field = BinaryField(bits)
    order = field.order
    exp = np.zeros(order - 1, dtype=np.int64)
    log = np.zeros(order, dtype=np.int64)
    x = 1
    for i in range(order - 1):
        exp[i] = x
        log[x] = i
        x = field.mul(x, 2)
    if x != 1 or len(set(exp.tolist())) != order - 1:
        raise AssertionError(f"polynomial for bits={bits} is not primitive")
    return log, exp


@dataclass(frozen=True)
class FourWiseSampler:
    """Degree-3 polynomial sampler: vertex ``v`` is included when the
    polynomial evaluated at field label ``v`` falls below ``threshold``."""

    field: BinaryField
    coeffs: tuple[int, int, int, int]
    threshold: int

    def __post_init__(self):
        for c in self.coeffs:
            if not 0 <= c < self.field.order:
                raise ValueError(f"coefficient {c} outside field of order {self.field.order}")
        if not 0 <= self.threshold <= self.field.order:
            raise ValueError("threshold outside [0, field order]")

    def value(self, label: int) -> int:
        c0, c1, c2, c3 = self.coeffs
        acc = c3
        for c in (c2, c1, c0):  # Horner
            acc = self.field.mul(acc, label) ^ c
        return acc

    def includes(self, label: int) -> bool:
        return self.value(label) < self.threshold

    @classmethod
    def for_probability(
        cls, n: int, p: float, coeffs: tuple[int, int, int, int]
    ) -> "FourWiseSampler":
        if not 0 <= p <= 1:
            raise ValueError(f"probability must be in [0, 1], got {p}")
        field = BinaryField.for_size(n)
        return cls(field=field, coeffs=coeffs, threshold=math.floor(p * field.order))

    @classmethod
    def random(cls, n: int, p: float, rng: random.Random) -> "FourWiseSampler":
        field = BinaryField.for_size(n)
        coeffs = tuple(rng.randrange(field.order) for _ in range(4))
        return cls(field=field, coeffs=coeffs, threshold=math.floor(p * field.order))


def fourwise_sample(g: Graph, p: float, sampler: FourWiseSampler) -> VertexSet:
    """Vertex sample with 4-wise independent inclusion indicators.

    The realized inclusion probability is ``floor(p * 2**k) / 2**k``, within
    ``2**-k`` of ``p``. The sampler's threshold must match ``p`` and its
    field must have at least ``g.n`` elements.
    """
    if sampler.field.order < g.n:
        raise ValueError(
            f"field order {sampler.field.order} below vertex count {g.n}"
        )
    if not 0 <= p <= 1:
        raise ValueError(f"probability must be in [0, 1], got {p}")
    if sampler.threshold != math.floor(p * sampler.field.order):
        raise ValueError("sampler threshold inconsistent with requested probability")
    return frozenset(v for v in range(g.n) if sampler.includes(v))


def _mul_by_scalar(values: np.ndarray, scalar: int, bits: int) -> np.ndarray:
    log, exp = _log_exp_tables(bits)
    if scalar == 0:
        return np.zeros_like(values)
    out = np.zeros_like(values)
    nz = values != 0
    out[nz] = exp[(log[values[nz]] + int(log[scalar])) % (len(exp))]
    return out


def inclusion_statistics(
    n: int, bits: int, p: float, tuples: int, seed: int
) -> tuple[np.ndarray, np.ndarray]:
    """Empirical inclusion frequencies over uniformly sampled coefficient
    tuples (the on-demand derandomization grader).

    Returns ``(per_vertex, pairwise)`` where ``per_vertex[v]`` is the
    fraction of tuples including vertex ``v`` and ``pairwise[u, v]`` the
    fraction including both ``u`` and ``v`` (diagonal equals per-vertex).
    """
    field = BinaryField(bits)
    if field.order < n:
        raise ValueError(f"field order {field.order} below vertex count {n}")
    threshold = math.floor(p * field.order)
    rng = np.random.default_rng(seed)
    coeffs = rng.integers(0, field.order, size=(4, tuples), dtype=np.int64)
    c0, c1, c2, c3 = coeffs
    included = np.zeros((n, tuples), dtype=bool)
    for v in range(n):
        x1 = v
        x2 = field.mul(v, v)
        x3 = field.mul(x2, v)
        value = (
            _mul_by_scalar(c3, x3, bits)
            ^ _mul_by_scalar(c2, x2, bits)
            ^ _mul_by_scalar(c1, x1, bits)
            ^ c0
        )
        included[v] = value < threshold
    per_vertex = included.mean(axis=1)
    # float32 keeps the joint counts exact below 2**24 at half the memory
    flat = included.astype(np.float32)
    pairwise = (flat @ flat.T).astype(np.float64) / tuples
    return per_vertex, pairwise
