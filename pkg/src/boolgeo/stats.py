"""Exact and asymptotic statistics over all orthogonal systems in m
minterm variables, under the uniform model (each of the 2**m forced-zero
sets equally likely).

Every exact value is an unbounded rational; floating point enters only
in the two asymptotic helpers.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from math import comb
from typing import Iterator

from .errors import LimitExceededError
from .geometry import irr_count
from .ortho import OrthogonalSystem

# Exact rationals are plain stdlib fractions: reduced, positive denominator.
ExactRational = Fraction

# Exhaustive averaging enumerates 2**(2**m_pow) forced-zero sets.
MAX_EXHAUSTIVE_VARS = 4

RNG_ALGORITHM = "mt19937"


def _check_m(m: int) -> None:
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")


def avg_irr_closed(m: int, r: int) -> Fraction:
    """Average number of irreducible components over the rank-r algebra,
    across all orthogonal systems in m minterm variables:

        (sum_{i<r} C(m, i) + 2**(m-r) * C(m, r)) / 2**m

    Inconsistent systems participate with component count 1.
    """
    _check_m(m)
    if not 1 <= r <= m:
        raise ValueError(f"need 1 <= r <= m, got r={r}, m={m}")
    total = sum(comb(m, i) for i in range(r)) + (1 << (m - r)) * comb(m, r)
    return Fraction(total, 1 << m)


def avg_irr_exhaustive(m_pow: int, r: int) -> Fraction:
    """The same average computed the long way: enumerate every
    forced-zero subset of the 2**m_pow minterm indices and take the mean
    of the per-system component count.  Must equal
    ``avg_irr_closed(2**m_pow, r)``.
    """
    if not isinstance(m_pow, int) or isinstance(m_pow, bool) or m_pow < 1:
        raise ValueError(f"m_pow must be a positive integer, got {m_pow!r}")
    if m_pow > MAX_EXHAUSTIVE_VARS:
        raise LimitExceededError(
            f"exhaustive averaging over 2**{1 << m_pow} systems is out of reach "
            f"(m_pow limit is {MAX_EXHAUSTIVE_VARS})"
        )
    m = 1 << m_pow
    if not 1 <= r <= m:
        raise ValueError(f"need 1 <= r <= m, got r={r}, m={m}")
    total = sum(
        irr_count(OrthogonalSystem(m_pow, mask), r) for mask in range(1 << m)
    )
    return Fraction(total, 1 << m)


def asymptotic_irr(m: int, r: int) -> float:
    """Large-m equivalent of :func:`avg_irr_closed`: C(m, r) / 2**r."""
    _check_m(m)
    if not 0 <= r <= m:
        raise ValueError(f"need 0 <= r <= m, got r={r}, m={m}")
    return comb(m, r) / (1 << r)


def avg_ir_rank(m: int) -> Fraction:
    """Average irreducibility rank across all orthogonal systems in m
    minterm variables; exactly m/2.

    Computed both in closed form and as the weighted sum
    2**(-m) * sum_a (m - a) * C(m, a); the two routes must agree.
    """
    _check_m(m)
    closed = Fraction(m, 2)
    summed = Fraction(
        sum((m - a) * comb(m, a) for a in range(m + 1)), 1 << m
    )
    if closed != summed:
        raise ArithmeticError(f"closed form {closed} != summation {summed}")
    return closed


def iso_pair_probability(m: int) -> Fraction:
    """Probability that two independently uniform orthogonal systems in m
    minterm variables define isomorphic solution sets:

        C(2m, m) / 4**m

    Verified internally against sum_i C(m, i)**2 / 4**m.
    """
    _check_m(m)
    pairs = comb(2 * m, m)
    by_size = sum(comb(m, i) ** 2 for i in range(m + 1))
    if pairs != by_size:
        raise ArithmeticError(f"C(2m,m)={pairs} != sum of squares {by_size}")
    return Fraction(pairs, 4**m)


def iso_pair_asymptotic(m: int) -> float:
    """Large-m equivalent of :func:`iso_pair_probability`: 1/sqrt(pi*m)."""
    _check_m(m)
    return 1.0 / math.sqrt(math.pi * m)


def sample_ortho(m_pow: int, seed: int) -> OrthogonalSystem:
    """One orthogonal system in 2**m_pow minterm variables, with the
    forced-zero set uniform among all subsets.  Deterministic per seed
    (Mersenne Twister)."""
    return next(sample_systems(m_pow, seed, 1))


def sample_systems(m_pow: int, seed: int, count: int) -> Iterator[OrthogonalSystem]:
    """A reproducible stream of ``count`` independent uniform samples."""
    if not isinstance(m_pow, int) or isinstance(m_pow, bool) or m_pow < 1:
        raise ValueError(f"m_pow must be a positive integer, got {m_pow!r}")
    if m_pow > 16:
        raise LimitExceededError(f"m_pow {m_pow} exceeds the sampling limit 16")
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    rng = random.Random(seed)
    m = 1 << m_pow
    for _ in range(count):
        yield OrthogonalSystem(m_pow, rng.getrandbits(m))
