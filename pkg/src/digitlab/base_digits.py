"""Arbitrary-size non-negative integers stored as packed base-q digits.

The representation packs several base-q digits into each 64-bit limb so
that multiplication by a small constant touches whole limbs instead of
individual digits, and the total digit sum is maintained as a cached
value that is refreshed in O(limbs) per multiply via chunked table
lookups.
"""

from __future__ import annotations

import numpy as np

DIGIT_ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"

_INT64_MAX = (1 << 63) - 1

# chunk tables for limb digit sums, keyed by base
_CHUNK_CACHE: dict[int, tuple[np.ndarray, int, int]] = {}


def _digits_per_limb(base: int, p_max: int) -> int:
    """Largest m such that a limb value times p_max (plus a carry-in)
    cannot overflow a signed 64-bit word."""
    m = 1
    while base ** (m + 1) * p_max <= _INT64_MAX:
        m += 1
    return m


def _chunk_table(base: int) -> tuple[np.ndarray, int, int]:
    """Digit-sum lookup table for all values below base**h, with h chosen
    so the table stays around a million entries."""
    cached = _CHUNK_CACHE.get(base)
    if cached is not None:
        return cached
    h = 1
    while base ** (h + 1) <= 1 << 20:
        h += 1
    table = np.zeros(1, dtype=np.int64)
    for _ in range(h):
        table = (np.arange(base, dtype=np.int64)[:, None] + table[None, :]).ravel()
    result = (table, base ** h, h)
    _CHUNK_CACHE[base] = result
    return result


class BaseQNumber:
    """A non-negative integer in base q with an exact cached digit sum.

    Limbs are little-endian; each holds `digits_per_limb` consecutive
    base-q digits as a value below q**digits_per_limb.  Zero is a single
    zero limb with digit count 1.
    """

    __slots__ = (
        "base",
        "p_max",
        "digits_per_limb",
        "limb_mod",
        "rescan_interval",
        "_limbs",
        "_digit_sum",
        "_mul_count",
    )

    def __init__(self, base: int, p_max: int = 64, rescan_interval: int = 4096):
        if base < 2:
            raise ValueError(f"base must be >= 2, got {base}")
        if p_max < 1:
            raise ValueError(f"p_max must be >= 1, got {p_max}")
        self.base = base
        self.p_max = p_max
        self.digits_per_limb = _digits_per_limb(base, p_max)
        self.limb_mod = base ** self.digits_per_limb
        self.rescan_interval = rescan_interval
        self._limbs = np.zeros(1, dtype=np.int64)
        self._digit_sum = 0
        self._mul_count = 0

    @classmethod
    def from_integer(cls, value: int, base: int, p_max: int = 64) -> "BaseQNumber":
        if value < 0:
            raise ValueError(f"value must be non-negative, got {value}")
        num = cls(base, p_max=p_max)
        limbs = []
        v = value
        while v:
            v, rest = divmod(v, num.limb_mod)
            limbs.append(rest)
        if limbs:
            num._limbs = np.array(limbs, dtype=np.int64)
        num._digit_sum = int(num._limb_digit_sums().sum())
        return num

    # ---- inspection ----------------------------------------------------

    def value(self) -> int:
        """Back-conversion to a native integer (intended for tests and
        small numbers; cost grows with size)."""
        total = 0
        for limb in reversed(self._limbs.tolist()):
            total = total * self.limb_mod + limb
        return total

    @property
    def digit_count(self) -> int:
        top = int(self._limbs[-1])
        if len(self._limbs) == 1 and top == 0:
            return 1
        nd = 0
        while top:
            top //= self.base
            nd += 1
        return (len(self._limbs) - 1) * self.digits_per_limb + nd

    def digit_sum(self) -> int:
        return self._digit_sum

    def digit_at(self, i: int) -> int:
        """Digit at 1-based position i, where i = 1 is the least
        significant digit."""
        if i < 1 or i > self.digit_count:
            raise IndexError(f"digit index {i} out of range 1..{self.digit_count}")
        limb_index, pos = divmod(i - 1, self.digits_per_limb)
        return (int(self._limbs[limb_index]) // self.base ** pos) % self.base

    def to_digit_string(self) -> str:
        """Canonical text form, most significant digit first.  Bases up
        to 36 use one character per digit; larger bases emit decimal
        digit values separated by ':'."""
        digits = []
        for limb in self._limbs.tolist():
            for _ in range(self.digits_per_limb):
                limb, d = divmod(limb, self.base)
                digits.append(d)
        while len(digits) > 1 and digits[-1] == 0:
            digits.pop()
        digits.reverse()
        if self.base <= 36:
            return "".join(DIGIT_ALPHABET[d] for d in digits)
        return ":".join(str(d) for d in digits)

    @classmethod
    def from_digit_string(cls, text: str, base: int, p_max: int = 64) -> "BaseQNumber":
        """Parse the output of to_digit_string."""
        if base <= 36:
            digits = [DIGIT_ALPHABET.index(c) for c in text.lower()]
        else:
            digits = [int(part) for part in text.split(":")]
        value = 0
        for d in digits:
            if d >= base:
                raise ValueError(f"digit {d} not valid in base {base}")
            value = value * base + d
        return cls.from_integer(value, base, p_max=p_max)

    def __repr__(self) -> str:
        return f"BaseQNumber(base={self.base}, digits={self.to_digit_string()!r})"

    # ---- arithmetic ----------------------------------------------------

    def mul_small_in_place(self, p: int) -> int:
        """Multiply by a small positive integer, in place.

        Returns the number of base-q carry units moved up across digit
        positions; the new digit sum satisfies exactly
        new_sum = p * old_sum - (base - 1) * carries.
        """
        if p < 1 or p > self.p_max:
            raise ValueError(f"multiplier {p} outside 1..{self.p_max}")
        old_sum = self._digit_sum
        t = self._limbs * p
        while True:
            carry = t // self.limb_mod
            if not carry.any():
                break
            t -= carry * self.limb_mod
            top = int(carry[-1])
            t[1:] += carry[:-1]
            if top:
                t = np.concatenate([t, carry[-1:]])
        self._limbs = t
        new_sum = int(self._limb_digit_sums().sum())
        self._digit_sum = new_sum
        self._mul_count += 1
        if self.rescan_interval and self._mul_count % self.rescan_interval == 0:
            rescan = self.rescan_digit_sum()
            if rescan != new_sum:
                raise RuntimeError(
                    f"digit sum cache drift: cached {new_sum}, rescan {rescan}"
                )
        return (p * old_sum - new_sum) // (self.base - 1)

    def _limb_digit_sums(self) -> np.ndarray:
        table, chunk_mod, h = _chunk_table(self.base)
        v = self._limbs.copy()
        sums = np.zeros(len(v), dtype=np.int64)
        for _ in range((self.digits_per_limb + h - 1) // h):
            sums += table[v % chunk_mod]
            v //= chunk_mod
        return sums

    def rescan_digit_sum(self) -> int:
        """Recompute the digit sum digit by digit, bypassing the lookup
        tables; used as a drift guard and by tests."""
        total = 0
        for limb in self._limbs.tolist():
            while limb:
                limb, d = divmod(limb, self.base)
                total += d
        return total
