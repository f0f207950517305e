"""Proportional rectangle extension by the diagonal/perpendicular construction.

A rectangle has width 1 and length ``x``.  Drawing the diagonal from (0, 0)
to (x, 1) and the perpendicular to it through (0, 1) cuts the strip
[0, 1/x] x [0, 1], which is similar to the whole; the rest has length
``x - 1/x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .approx import ApproxReal, Interval, eval_decimal, interval_of
from .exact import GoldenElem, TowerElem, is_exact, sign

Branch = Literal["below_phi", "above_phi"]


def simplify(x):
    """Demote an exact value to the smallest representation holding it."""
    if isinstance(x, TowerElem) and x.is_golden():
        x = x.p
    if isinstance(x, GoldenElem) and x.is_rational():
        x = x.b
    if isinstance(x, int) and not isinstance(x, bool):
        x = Fraction(x)
    return x


def _exact_base(x) -> bool:
    x = simplify(x)
    return isinstance(x, (Fraction, GoldenElem))


def _approx_root(rho, branch: Branch) -> ApproxReal:
    def bounds(bits: int) -> Interval:
        r = interval_of(rho, bits + 8)
        if branch == "above_phi":
            x = (r + (r * r + 4).sqrt(bits + 6)) / 2
        else:
            x = (1 + (1 + 4 * r * r).sqrt(bits + 6)) / (2 * r)
        return x.round_out(bits + 4)

    return ApproxReal(bounds, f"extend({branch})")


def extend_ratio(rho, branch: Branch):
    """Length ``x`` of the width-1 rectangle whose construction yields proportion ``rho``.

    below_phi: root of rho x^2 - x - rho = 0, x in (1, phi].
    above_phi: root of x^2 - rho x - 1 = 0, x >= phi.
    Exact for rational or golden ``rho``; an :class:`ApproxReal` otherwise.
    """
    if branch not in ("below_phi", "above_phi"):
        raise ValueError(f"unknown branch {branch!r}")
    if sign(rho - 1) < 0:
        raise ValueError(f"rho must be >= 1 (long side over short side), got {rho}")
    if not _exact_base(rho):
        return _approx_root(rho, branch)
    rho = simplify(rho)
    g = GoldenElem(0, 0) + rho
    if branch == "above_phi":
        x = TowerElem(g / 2, Fraction(1, 2), g * g + 4)
    else:
        half_inv = 1 / (2 * g)
        x = TowerElem(half_inv, half_inv, 1 + 4 * g * g)
    return simplify(x)


@dataclass(frozen=True)
class Rect:
    """Width-1 rectangle of the given length."""

    length: object
    width: object = Fraction(1)

    def __post_init__(self):
        if self.width != 1:
            raise ValueError("rectangles are normalized to width 1")
        if sign(self.length) <= 0:
            raise ValueError("length must be positive")

    @property
    def proportion(self):
        """Long side over short side."""
        return self.length if sign(self.length - 1) >= 0 else 1 / self.length


Point = tuple


@dataclass(frozen=True)
class Subdivision:
    whole: Rect
    kept: Rect
    strip: Rect
    diagonal: tuple[Point, Point]
    perpendicular: tuple[Point, Point]
    foot: Point

    @property
    def x(self):
        return self.whole.length

    def to_json(self, digits: int = 12) -> dict:
        def num(v) -> str:
            return eval_decimal(v, digits).digits

        def pt(p) -> list[str]:
            return [num(p[0]), num(p[1])]

        def rect(r: Rect) -> dict:
            return {"w": num(r.width), "l": num(r.length)}

        return {
            "whole": rect(self.whole),
            "kept": rect(self.kept),
            "strip": rect(self.strip),
            "construction": {
                "diagonal": [pt(p) for p in self.diagonal],
                "perpendicular": [pt(p) for p in self.perpendicular],
                "foot": pt(self.foot),
            },
        }


def subdivide(x) -> Subdivision:
    if not is_exact(x) and not isinstance(x, ApproxReal):
        raise TypeError(f"cannot subdivide {type(x).__name__}")
    if sign(x - 1) <= 0:
        raise ValueError(f"x must exceed 1 to leave a strip, got {x}")
    x = simplify(x)
    inv = 1 / x
    zero, one = Fraction(0), Fraction(1)
    d = x * x + 1
    return Subdivision(
        whole=Rect(x),
        kept=Rect(x - inv),
        strip=Rect(inv),
        diagonal=((zero, zero), (x, one)),
        perpendicular=((zero, one), (inv, zero)),
        foot=(x / d, 1 / d),
    )


def extend_sequence(count: int) -> list:
    """x_0 = 1, x_{n+1} = extend_ratio(x_n, below_phi); tends to sqrt 2.

    x_1 = phi and x_2 = chi are exact; from x_3 on the values are
    :class:`ApproxReal` enclosures.
    """
    if count < 1:
        raise ValueError("count must be positive")
    xs = [Fraction(1)]
    while len(xs) < count + 1:
        xs.append(extend_ratio(xs[-1], "below_phi"))
    return xs


def extend_sequence_json(count: int, digits: int = 12) -> list[dict]:
    from .exact import to_json

    out = []
    for k, x in enumerate(extend_sequence(count)):
        out.append({
            "index": k,
            "exact": to_json(x) if is_exact(x) else None,
            "decimal": eval_decimal(x, digits).digits,
        })
    return out
