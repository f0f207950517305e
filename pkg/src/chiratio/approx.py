"""Guaranteed-precision decimals via rational interval arithmetic.

Intervals have :class:`~fractions.Fraction` endpoints, so the only rounding is
in :meth:`Interval.sqrt`, which rounds outward to a ``2**-bits`` grid.  An
:class:`ApproxReal` is a real number known only through enclosures at any
requested precision; it covers values that live beyond the exact tower
(nested radicals, iterated rectangle extensions).
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Callable

from .exact import GoldenElem, TowerElem, to_fraction

MAX_BITS = 1 << 15


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> Interval:
        x = to_fraction(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def _other(self, other) -> Interval | None:
        if isinstance(other, Interval):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Interval.point(other)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def reciprocal(self) -> Interval:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError(f"interval [{float(self.lo)}, {float(self.hi)}] contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __abs__(self) -> Interval:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return Interval(Fraction(0), max(-self.lo, self.hi))

    def sqrt(self, bits: int) -> Interval:
        """Outward-rounded square root; negative parts are clipped to 0."""
        scale = 1 << (2 * bits)
        lo = max(self.lo, Fraction(0))
        hi = max(self.hi, Fraction(0))
        s_lo = isqrt(floor(lo * scale))
        n_hi = ceil(hi * scale)
        s_hi = isqrt(n_hi)
        if s_hi * s_hi < n_hi:
            s_hi += 1
        return Interval(Fraction(s_lo, 1 << bits), Fraction(s_hi, 1 << bits))

    def round_out(self, bits: int) -> Interval:
        """Snap endpoints outward to the ``2**-bits`` grid to bound their size."""
        scale = 1 << bits
        return Interval(Fraction(floor(self.lo * scale), scale), Fraction(ceil(self.hi * scale), scale))


def _sqrt5(bits: int) -> Interval:
    return Interval.point(5).sqrt(bits)


def interval_of(x, bits: int) -> Interval:
    """Enclosure of ``x`` whose width shrinks like ``2**-bits``."""
    if isinstance(x, Interval):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Interval.point(x)
    if isinstance(x, GoldenElem):
        if x.a == 0:
            return Interval.point(x.b)
        phi = (1 + _sqrt5(bits + 2)) / 2
        return phi * x.a + x.b
    if isinstance(x, TowerElem):
        p = interval_of(x.p, bits)
        if not x.q:
            return p
        q = interval_of(x.q, bits + 4)
        r = interval_of(x.r, bits + 8)
        mag = max(abs(q.lo), abs(q.hi))
        extra = max(0, int(mag).bit_length()) + 4
        return p + q * r.sqrt(bits + extra)
    if isinstance(x, ApproxReal):
        return x.bounds(bits)
    raise TypeError(f"no interval for {type(x).__name__}")


class ApproxReal:
    """A real number given by an enclosure function ``bits -> Interval``.

    Enclosures are cached per precision.  Arithmetic with exact values or
    other approximations yields new :class:`ApproxReal` objects.
    """

    def __init__(self, bounds: Callable[[int], Interval], label: str = ""):
        self._fn = bounds
        self._cache: dict[int, Interval] = {}
        self.label = label

    def bounds(self, bits: int) -> Interval:
        iv = self._cache.get(bits)
        if iv is None:
            iv = self._fn(bits)
            self._cache[bits] = iv
        return iv

    @classmethod
    def of(cls, x) -> ApproxReal:
        if isinstance(x, ApproxReal):
            return x
        return cls(lambda bits: interval_of(x, bits), label=str(x))

    def _binary(self, other, fn, label):
        if not isinstance(other, ApproxReal):
            try:
                interval_of(other, 8)
            except TypeError:
                return NotImplemented
        o = ApproxReal.of(other)
        return ApproxReal(lambda bits: fn(self.bounds(bits + 4), o.bounds(bits + 4)).round_out(bits + 2), label)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b, "sum")

    def __radd__(self, other):
        return self._binary(other, lambda a, b: b + a, "sum")

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b, "difference")

    def __rsub__(self, other):
        return self._binary(other, lambda a, b: b - a, "difference")

    def __mul__(self, other):
        return self._binary(other, lambda a, b: a * b, "product")

    def __rmul__(self, other):
        return self._binary(other, lambda a, b: b * a, "product")

    def __truediv__(self, other):
        return self._binary(other, lambda a, b: a / b, "quotient")

    def __rtruediv__(self, other):
        return self._binary(other, lambda a, b: b / a, "quotient")

    def __neg__(self) -> ApproxReal:
        return ApproxReal(lambda bits: -self.bounds(bits), f"-{self.label}")

    def __abs__(self) -> ApproxReal:
        return ApproxReal(lambda bits: abs(self.bounds(bits)), f"|{self.label}|")

    def sqrt(self) -> ApproxReal:
        return ApproxReal(lambda bits: self.bounds(bits + 4).sqrt(bits + 2), f"sqrt({self.label})")

    def certified_sign(self, max_bits: int = 4096) -> int:
        bits = 32
        while bits <= max_bits:
            iv = self.bounds(bits)
            if iv.lo > 0:
                return 1
            if iv.hi < 0:
                return -1
            if iv.lo == iv.hi == 0:
                return 0
            bits *= 2
        raise ArithmeticError(f"sign of {self.label or 'value'} undecided at {max_bits} bits")

    def __float__(self) -> float:
        iv = self.bounds(64)
        return float((iv.lo + iv.hi) / 2)

    def __repr__(self) -> str:
        return f"ApproxReal({eval_decimal(self, 12).digits})"


def approx_sqrt(x) -> ApproxReal:
    return ApproxReal.of(x).sqrt()


@dataclass(frozen=True)
class DecimalApprox:
    """Decimal string truncated toward zero, with ``|digits - true| <= error_bound``."""

    digits: str
    error_bound: Fraction
    places: int

    def __post_init__(self):
        if self.error_bound >= Fraction(1, 10**self.places):
            raise ValueError(f"error bound {self.error_bound} too large for {self.places} places")

    def as_decimal(self) -> Decimal:
        return Decimal(self.digits)

    def __str__(self) -> str:
        return self.digits


def _format_scaled(t: int, places: int, negative: bool) -> str:
    s = str(t).rjust(places + 1, "0")
    body = f"{s[:-places]}.{s[-places:]}" if places else s
    return ("-" if negative else "") + body


def _truncate(lo: Fraction, hi: Fraction, places: int, force: bool) -> DecimalApprox | None:
    """Decide the truncated decimal of a value known to lie in [lo, hi]."""
    scale = 10**places
    ulp = Fraction(1, scale)
    negative = hi < 0 or (lo < 0 and hi <= 0)
    if negative:
        lo, hi = -hi, -lo
    if lo < 0:
        # straddles zero: only decidable when both ends truncate to 0
        if -lo < ulp and hi < ulp:
            return DecimalApprox(_format_scaled(0, places, False), max(-lo, hi), places)
        return None
    t_lo, t_hi = floor(lo * scale), floor(hi * scale)
    if t_lo != t_hi:
        if not force:
            return None
        # value sits on a digit boundary; the upper truncation is within one ulp
        t = t_hi
    else:
        t = t_lo
    printed = Fraction(t, scale)
    bound = max(hi - printed, printed - lo)
    return DecimalApprox(_format_scaled(t, places, negative and t != 0), bound, places)


def eval_decimal(x, digits: int) -> DecimalApprox:
    """Truncated decimal expansion of ``x`` with ``digits`` places after the point.

    Exact rationals are truncated directly.  Everything else is enclosed in
    intervals at doubling precision until the enclosure is narrower than
    ``10**-(digits+2)`` and both ends truncate identically.
    """
    if digits < 0:
        raise ValueError("digits must be non-negative")
    if isinstance(x, GoldenElem) and x.a == 0:
        x = x.b
    if isinstance(x, TowerElem) and not x.q and x.p.a == 0:
        x = x.p.b
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        x = Fraction(x)
        out = _truncate(x, x, digits, force=True)
        assert out is not None
        return out
    target = Fraction(1, 10 ** (digits + 2))
    bits = int((digits + 2) * 3.33) + 16
    extra_rounds = 0
    while True:
        iv = interval_of(x, bits)
        if iv.width < target:
            out = _truncate(iv.lo, iv.hi, digits, force=False)
            if out is not None:
                return out
            extra_rounds += 1
            if extra_rounds > 6 or bits >= MAX_BITS:
                out = _truncate(iv.lo, iv.hi, digits, force=True)
                if out is not None:
                    return out
        if bits >= MAX_BITS:
            raise ArithmeticError(f"could not reach {digits} digits for {x!r}")
        bits *= 2


def to_decimal(x, digits: int) -> Decimal:
    return eval_decimal(x, digits).as_decimal()


def abs_diff_below(x, y, tol: Fraction) -> bool:
    """Certify ``|x - y| < tol`` using enclosures (works for exact and approximate values)."""
    tol = to_fraction(tol) if not isinstance(tol, Fraction) else tol
    d = ApproxReal.of(x) - ApproxReal.of(y)
    bits = 64
    while bits <= MAX_BITS:
        iv = abs(d.bounds(bits))
        if iv.hi < tol:
            return True
        if iv.lo >= tol:
            return False
        bits *= 2
    return False
