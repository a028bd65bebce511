"""Digit statistics of the sequence p^1, p^2, ... written in base q.

The walk multiplies a packed base-q number by p repeatedly and emits
(exponent, digit count, digit sum) samples.  On top of those samples the
module provides the centered/normed statistics used to compare the digit
sums against an ideal i.i.d. digit model: the CLT-style normalization,
the per-digit-count normalization, the iterated-logarithm deviation, and
the margin of the proven lower bound on digit sums of powers.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterator

from .base_digits import BaseQNumber
from .errors import ResourceLimitError


class UndefinedForSmallN(ValueError):
    """Statistic involves log(log(n)) and needs n >= 3."""


@dataclass(frozen=True)
class ExpectedStats:
    """Per-digit pseudo-mean/variance of an ideal uniform digit in base q,
    and the digit-growth rate log_q(p)."""

    p: int
    q: int
    digit_mean: float
    digit_var: float
    log_ratio: float

    @classmethod
    def for_pair(cls, p: int, q: int) -> "ExpectedStats":
        if p < 2 or q < 2:
            raise ValueError(f"need p >= 2 and q >= 2, got p={p}, q={q}")
        _warn_if_multiplicatively_dependent(p, q)
        return cls(
            p=p,
            q=q,
            digit_mean=(q - 1) / 2,
            digit_var=(q * q - 1) / 12,
            log_ratio=math.log(p) / math.log(q),
        )


def _warn_if_multiplicatively_dependent(p: int, q: int, max_exp: int = 16) -> None:
    # the digit model presumes log p / log q irrational, i.e. p^a != q^b
    for a in range(1, max_exp + 1):
        pa = p ** a
        qb = q
        while qb < pa:
            qb *= q
        if qb == pa:
            warnings.warn(
                f"p={p} and q={q} satisfy {p}^{a} = {q}^b; "
                "digit statistics of powers are degenerate for such pairs",
                stacklevel=3,
            )
            return


@dataclass(frozen=True)
class PowerSample:
    """One walk sample: k is the digit count and s the digit sum of p^n
    in base q."""

    n: int
    k: int
    s: int


@dataclass(frozen=True)
class StewartConfig:
    """Effective constant for the proven digit-sum lower bound
    s > log(n) / (log(log(n)) + c0) - 1.  No canonical value is known
    here, so it is plain configuration."""

    c0: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.c0) or self.c0 < 0:
            raise ValueError(f"c0 must be finite and >= 0, got {self.c0}")


def run_power_walk(
    p: int,
    q: int,
    n_max: int,
    stride: int = 1,
    digit_cap: int = 10 ** 7,
    p_max: int = 64,
) -> Iterator[PowerSample]:
    """Walk p^n for n = 1..n_max and yield samples at multiples of stride.

    Every exponent is computed (the walk is sequential); stride only
    thins the emitted samples.  Raises ResourceLimitError if the digit
    count passes digit_cap.
    """
    if p < 2 or q < 2:
        raise ValueError(f"need p >= 2 and q >= 2, got p={p}, q={q}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    x = BaseQNumber.from_integer(1, q, p_max=p_max)
    for n in range(1, n_max + 1):
        x.mul_small_in_place(p)
        if x.digit_count > digit_cap:
            raise ResourceLimitError(
                f"digit count {x.digit_count} exceeds cap {digit_cap} at n={n}"
            )
        if n % stride == 0:
            yield PowerSample(n=n, k=x.digit_count, s=x.digit_sum())


def s_value(sample: PowerSample, stats: ExpectedStats) -> float:
    """CLT normalization of the digit sum: centered by the pseudo-mean
    growth and scaled by the pseudo-standard-deviation of n*log_q(p)
    ideal digits."""
    n = sample.n
    center = stats.digit_mean * stats.log_ratio * n
    spread = math.sqrt(stats.digit_var * stats.log_ratio * n)
    return (sample.s - center) / spread


def kappa(sample: PowerSample, stats: ExpectedStats) -> float:
    """Digit-sum deviation normalized per actual digit count k, not the
    linearized n*log_q(p)."""
    center = stats.digit_mean * sample.k
    return (sample.s - center) / math.sqrt(stats.digit_var)


def delta_power(sample: PowerSample, stats: ExpectedStats) -> float:
    """Iterated-logarithm deviation of the digit sum.

    Under the ideal digit model its limsup/liminf would be +1/-1.
    Natural logarithms; defined for n >= 3 only.
    """
    n = sample.n
    if n < 3:
        raise UndefinedForSmallN(f"delta needs n >= 3, got {n}")
    center = stats.digit_mean * stats.log_ratio * n
    spread = math.sqrt(2 * stats.digit_var * stats.log_ratio * n * math.log(math.log(n)))
    return (sample.s - center) / spread


def stewart_margin(sample: PowerSample, cfg: StewartConfig) -> float:
    """How far the digit sum sits above the proven lower bound
    log(n)/(log(log(n)) + c0) - 1, for a user-chosen c0.

    Positive means the bound holds at this n with this c0.  Reporting
    only; c0 has no derivable value here.
    """
    n = sample.n
    if n < 3:
        raise UndefinedForSmallN(f"stewart margin needs n >= 3, got {n}")
    bound = math.log(n) / (math.log(math.log(n)) + cfg.c0) - 1
    return sample.s - bound


def check_sample(sample: PowerSample, stats: ExpectedStats) -> None:
    """Raise if a sample violates the structural invariants: digit count
    within 1 of n*log_q(p), digit sum in range, and the digit sum
    congruent to p^n modulo q-1."""
    n, k, s = sample.n, sample.k, sample.s
    if abs(k - n * stats.log_ratio) > 1:
        raise AssertionError(f"digit count {k} too far from {n * stats.log_ratio}")
    if not 0 < s <= (stats.q - 1) * k:
        raise AssertionError(f"digit sum {s} outside (0, {(stats.q - 1) * k}]")
    if stats.q > 2 and s % (stats.q - 1) != pow(stats.p, n, stats.q - 1):
        raise AssertionError(f"digit sum {s} incongruent to {stats.p}^{n} mod {stats.q - 1}")
