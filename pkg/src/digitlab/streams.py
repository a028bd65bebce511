"""Decimal digit sequences of mathematical constants and digit files.

All generators produce the FRACTIONAL-part digits d(1), d(2), ... (the
integer parts 3, 2, 1 of pi, e, sqrt(2) are excluded); file ingestion
has a skip parameter so either convention can be reproduced.

pi uses Chudnovsky-series binary splitting, e uses binary splitting over
the reciprocal-factorial series, square roots take the integer square
root of radicand * 10^(2*count).  Exact integer arithmetic throughout;
gmpy2 is used for the big integers when available, with a plain-int
fallback.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass

from .errors import DigitFileError, ResourceLimitError

try:
    from gmpy2 import mpz, isqrt as _isqrt

    def _decimal_string(x) -> str:
        return mpz(x).digits(10)

except ImportError:  # pragma: no cover - exercised only without gmpy2
    mpz = int
    from math import isqrt as _isqrt

    def _decimal_string(x) -> str:
        if hasattr(sys, "set_int_max_str_digits"):
            sys.set_int_max_str_digits(max(sys.get_int_max_str_digits(), 8 * 10 ** 6))
        return str(x)


DEFAULT_DIGIT_CAP = 2_000_000

# maps ASCII '0'..'9' to the digit values 0..9
_ASCII_TO_VALUE = bytes(i - 48 if 48 <= i <= 57 else 255 for i in range(256))


@dataclass(frozen=True)
class DigitStream:
    """An immutable run of base-10 digits; element i (0-based) is the
    fractional digit d(i+1)."""

    source: str
    digits: bytes

    def __post_init__(self) -> None:
        bad = self.digits.translate(None, bytes(range(10)))
        if bad:
            raise ValueError(f"digit value {bad[0]} outside 0..9 in {self.source}")

    @property
    def length(self) -> int:
        return len(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def digit_at(self, i: int) -> int:
        """1-based access: digit_at(1) is the first fractional digit."""
        if i < 1 or i > len(self.digits):
            raise IndexError(f"digit index {i} out of range 1..{len(self.digits)}")
        return self.digits[i - 1]


def _guard(count: int) -> int:
    return math.ceil(math.log10(count)) + 10 if count > 1 else 10


def _check_count(count: int, cap: int) -> None:
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if count > cap:
        raise ResourceLimitError(f"count {count} exceeds cap {cap}")


def _digit_bytes(text: str) -> bytes:
    return text.encode("ascii").translate(_ASCII_TO_VALUE)


# ---- pi --------------------------------------------------------------

_CHUD_A = 13591409
_CHUD_B = 545140134
_CHUD_C = 640320
_CHUD_C3_24 = _CHUD_C ** 3 // 24
# decimal digits contributed per series term
_CHUD_DIGITS_PER_TERM = math.log10(_CHUD_C3_24 / 72)


def _pi_split(a: int, b: int):
    if b - a == 1:
        if a == 0:
            pab = qab = mpz(1)
        else:
            pab = mpz(6 * a - 5) * (2 * a - 1) * (6 * a - 1)
            qab = mpz(a) ** 3 * _CHUD_C3_24
        tab = pab * (_CHUD_A + _CHUD_B * a)
        if a & 1:
            tab = -tab
        return pab, qab, tab
    m = (a + b) // 2
    p1, q1, t1 = _pi_split(a, m)
    p2, q2, t2 = _pi_split(m, b)
    return p1 * p2, q1 * q2, q2 * t1 + p1 * t2


def _pi_scaled(precision: int):
    """floor(pi * 10^precision)."""
    terms = int(precision / _CHUD_DIGITS_PER_TERM) + 2
    _, q, t = _pi_split(0, terms)
    root = _isqrt(mpz(10005) * mpz(10) ** (2 * precision))
    return (q * 426880 * root) // t


def pi_digits(count: int, cap: int = DEFAULT_DIGIT_CAP) -> DigitStream:
    """First `count` fractional decimal digits of pi."""
    _check_count(count, cap)
    text = _decimal_string(_pi_scaled(count + _guard(count)))
    return DigitStream("pi", _digit_bytes(text[1:1 + count]))


# ---- e ---------------------------------------------------------------

def _e_split(a: int, b: int):
    """(p, q) with q = b!/a! and sum_{k=a}^{b-1} 1/k! = p * a!/b!,
    so the full sum over [0, K) is p / K!."""
    if b - a == 1:
        return mpz(a + 1), mpz(a + 1)
    m = (a + b) // 2
    p1, q1 = _e_split(a, m)
    p2, q2 = _e_split(m, b)
    return p1 * q2 + p2, q1 * q2


def _e_terms(precision: int) -> int:
    # smallest K with K! > 10^(precision+2)
    total, k = 0.0, 1
    while total <= precision + 2:
        k += 1
        total += math.log10(k)
    return k


def e_digits(count: int, cap: int = DEFAULT_DIGIT_CAP) -> DigitStream:
    """First `count` fractional decimal digits of e."""
    _check_count(count, cap)
    precision = count + _guard(count)
    terms = _e_terms(precision)
    p, q = _e_split(0, terms)
    text = _decimal_string((p * mpz(10) ** precision) // q)
    return DigitStream("e", _digit_bytes(text[1:1 + count]))


# ---- square roots ----------------------------------------------------

def sqrt_digits(radicand: int, count: int, cap: int = DEFAULT_DIGIT_CAP) -> DigitStream:
    """First `count` fractional decimal digits of sqrt(radicand).

    The truncation floor(sqrt(radicand) * 10^count) is computed exactly
    via the integer square root, so every prefix satisfies
    a^2 <= radicand * 10^(2n) < (a+1)^2.
    """
    if radicand < 2:
        raise ValueError(f"radicand must be >= 2, got {radicand}")
    root = _isqrt(mpz(radicand))
    if root * root == radicand:
        raise ValueError(f"radicand {radicand} is a perfect square; digits terminate")
    _check_count(count, cap)
    a = _isqrt(mpz(radicand) * mpz(10) ** (2 * count))
    text = _decimal_string(a)
    int_len = len(_decimal_string(root))
    return DigitStream(f"sqrt{radicand}", _digit_bytes(text[int_len:int_len + count]))


# ---- digit files -----------------------------------------------------

_WHITESPACE = frozenset(b" \t\r\n")


def file_digits(
    path: str,
    count: int | None = None,
    skip: int = 0,
    cap: int = DEFAULT_DIGIT_CAP,
) -> DigitStream:
    """Parse a digit file: ASCII digits in order, whitespace ignored, at
    most one '.' allowed, anything else fatal with its offset.

    `skip` drops leading digits (integer parts, headers); `count` limits
    how many digits are returned after the skip (all remaining, up to
    the cap, when None).
    """
    if skip < 0:
        raise ValueError(f"skip must be >= 0, got {skip}")
    if count is not None:
        _check_count(count, cap)
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise DigitFileError(f"cannot read digit file {path}: {exc}") from exc
    out = bytearray()
    limit = skip + (count if count is not None else cap)
    seen_dot = False
    for offset, byte in enumerate(data):
        if 48 <= byte <= 57:
            out.append(byte - 48)
            if len(out) >= limit:
                break
        elif byte in _WHITESPACE:
            continue
        elif byte == 0x2E:  # '.'
            if seen_dot:
                raise DigitFileError(
                    f"second '.' at offset {offset} in {path}", offset=offset
                )
            seen_dot = True
        else:
            raise DigitFileError(
                f"illegal character {chr(byte)!r} at offset {offset} in {path}",
                offset=offset,
            )
    if len(out) <= skip:
        raise DigitFileError(
            f"{path} holds {len(out)} digits, fewer than the {skip} to skip"
        )
    digits = bytes(out[skip:])
    if count is not None and len(digits) < count:
        raise DigitFileError(
            f"{path} holds {len(digits)} digits after skip, fewer than requested {count}"
        )
    return DigitStream(f"file:{path}", digits)
