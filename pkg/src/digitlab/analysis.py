"""Running digit-sum diagnostics for digit streams.

Two families of output: the iterated-logarithm deviation series
delta(n) = (S(n) - mean*n) / sqrt(2 * var * n * log log n) for a stream
of base-b digits, and histogram machinery for comparing a sample of
normalized values against the standard normal density (including a
Pearson chi-square figure of merit).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

# adaptive downsampling: every n up to this bound, then every 100th
_DENSE_LIMIT = 10_000
_SPARSE_STRIDE = 100


class RunningSums:
    """Exact integer digit-sum accumulator for base-b digits."""

    def __init__(self, base: int = 10):
        if base < 2:
            raise ValueError(f"base must be >= 2, got {base}")
        self.base = base
        self.n = 0
        self.s = 0

    def push(self, digit: int) -> None:
        if not 0 <= digit < self.base:
            raise ValueError(f"digit {digit} outside 0..{self.base - 1}")
        self.n += 1
        self.s += digit


@dataclass(frozen=True)
class DeltaPoint:
    """delta is None for n < 3, where log log n is not positive."""

    n: int
    s: int
    delta: float | None


def delta_value(n: int, s: int, base: int = 10) -> float | None:
    """Iterated-logarithm deviation of a digit sum s over n base-b
    digits; None for n < 3."""
    if n < 3:
        return None
    mean = (base - 1) / 2
    var = (base * base - 1) / 12
    return (s - mean * n) / math.sqrt(2 * var * n * math.log(math.log(n)))


def running_delta(
    stream: Iterable[int],
    stride: int | None = 1,
    base: int = 10,
) -> Iterator[DeltaPoint]:
    """Walk a digit stream and yield (n, S, delta) points.

    stride=k emits every k-th n plus the final one; stride=None selects
    the adaptive default (every n up to 10^4, then every 100th).  The
    digit sum is accumulated exactly, so the point at a given n does not
    depend on the stride.
    """
    if stride is not None and stride < 1:
        raise ValueError(f"stride must be >= 1, got {stride}")
    acc = RunningSums(base)
    last_emitted = 0
    for digit in stream:
        acc.push(digit)
        n = acc.n
        if stride is None:
            emit = n <= _DENSE_LIMIT or n % _SPARSE_STRIDE == 0
        else:
            emit = n % stride == 0
        if emit:
            yield DeltaPoint(n=n, s=acc.s, delta=delta_value(n, acc.s, base))
            last_emitted = n
    if acc.n == 0:
        raise ValueError("empty digit stream")
    if last_emitted != acc.n:
        yield DeltaPoint(n=acc.n, s=acc.s, delta=delta_value(acc.n, acc.s, base))


class Histogram:
    """Uniform-width histogram over [lo, hi] with one underflow and one
    overflow bin.  counts[0] is the underflow bin, counts[-1] overflow."""

    def __init__(self, lo: float = -4.0, hi: float = 4.0, bins: int = 40):
        if not (math.isfinite(lo) and math.isfinite(hi)) or hi <= lo:
            raise ValueError(f"bad histogram range [{lo}, {hi}]")
        if bins < 1:
            raise ValueError(f"need at least 1 bin, got {bins}")
        self.lo = lo
        self.hi = hi
        self.bins = bins
        self.width = (hi - lo) / bins
        self.counts = [0] * (bins + 2)
        self.total = 0

    def insert(self, x: float) -> None:
        if not math.isfinite(x):
            raise ValueError(f"cannot insert non-finite value {x}")
        if x < self.lo:
            idx = 0
        elif x >= self.hi:
            idx = self.bins + 1
        else:
            idx = 1 + min(int((x - self.lo) / self.width), self.bins - 1)
        self.counts[idx] += 1
        self.total += 1

    def edges(self) -> list[tuple[float, float]]:
        """(lo, hi) per bin, underflow and overflow included with
        infinite outer edges."""
        inner = [(self.lo + i * self.width, self.lo + (i + 1) * self.width)
                 for i in range(self.bins)]
        return [(-math.inf, self.lo)] + inner + [(self.hi, math.inf)]


def normal_pdf(x: float) -> float:
    """Standard normal density."""
    return math.exp(-0.5 * x * x) / math.sqrt(2 * math.pi)


# Abramowitz & Stegun 26.2.17 rational approximation of the standard
# normal CDF; absolute error below 7.5e-8.
_CDF_T_SCALE = 0.2316419
_CDF_COEFFS = (0.319381530, -0.356563782, 1.781477937, -1.821255978, 1.330274429)


def normal_cdf(x: float) -> float:
    """Standard normal CDF via a documented rational approximation
    (absolute error < 1e-7)."""
    if x == math.inf:
        return 1.0
    if x == -math.inf:
        return 0.0
    if x < 0:
        return 1.0 - normal_cdf(-x)
    t = 1.0 / (1.0 + _CDF_T_SCALE * x)
    poly = 0.0
    for c in reversed(_CDF_COEFFS):
        poly = poly * t + c
    return 1.0 - normal_pdf(x) * poly * t


def _merged_cells(h: Histogram) -> list[tuple[int, float]]:
    """(observed, expected) per bin after merging bins with expected
    count below 5 into their neighbor toward the center."""
    cells = [
        [obs, h.total * (normal_cdf(b) - normal_cdf(a))]
        for obs, (a, b) in zip(h.counts, h.edges())
    ]
    changed = True
    while changed and len(cells) > 1:
        changed = False
        center = len(cells) // 2
        for i, cell in enumerate(cells):
            if cell[1] < 5.0:
                j = i + 1 if i < center else i - 1
                j = min(max(j, 0), len(cells) - 1)
                if j == i:
                    j = i - 1 if i > 0 else i + 1
                cells[j][0] += cell[0]
                cells[j][1] += cell[1]
                del cells[i]
                changed = True
                break
    return [(obs, exp) for obs, exp in cells]


def chi_square_vs_normal(h: Histogram) -> tuple[float, int]:
    """Pearson statistic of the histogram against the standard normal,
    with low-expectation bins merged toward the center first.

    Returns (statistic, degrees_of_freedom); df = effective bins - 1,
    so df == 0 flags a degenerate single-bin comparison.
    """
    if h.total < 100:
        raise ValueError(f"need at least 100 samples, got {h.total}")
    cells = _merged_cells(h)
    stat = sum((obs - exp) ** 2 / exp for obs, exp in cells if exp > 0)
    return stat, len(cells) - 1


def series_extrema(
    points: Sequence[DeltaPoint], from_n: int = 0
) -> tuple[float, float, int]:
    """(min delta, max delta, count with |delta| > 1) over the defined
    points with n >= from_n."""
    deltas = [p.delta for p in points if p.n >= from_n and p.delta is not None]
    if not deltas:
        raise ValueError(f"no defined points with n >= {from_n}")
    return min(deltas), max(deltas), sum(1 for d in deltas if abs(d) > 1)


def convergence_diagnostic(
    points: Sequence[DeltaPoint], n_total: int
) -> tuple[float, float] | None:
    """Mean |delta| over an early window [n_total/1000, n_total/100] and
    a late window [0.9 * n_total, n_total]; None when the series is too
    short for distinct windows."""
    early_lo, early_hi = max(3, n_total // 1000), n_total // 100
    late_lo = (9 * n_total) // 10
    if early_hi <= early_lo or late_lo <= early_hi:
        return None
    early = [abs(p.delta) for p in points
             if early_lo <= p.n <= early_hi and p.delta is not None]
    late = [abs(p.delta) for p in points if p.n >= late_lo and p.delta is not None]
    if not early or not late:
        return None
    return sum(early) / len(early), sum(late) / len(late)
