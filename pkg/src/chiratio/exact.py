"""Exact arithmetic: rationals, the golden field Q(sqrt 5) and one radical over it.

Rationals are :class:`fractions.Fraction`.  Elements of Q(sqrt 5) are stored in
the phi-basis as ``a*phi + b``; a :class:`TowerElem` is ``p + q*sqrt(r)`` with
``p, q, r`` golden.  Every value is immutable and normalized on construction,
so zero tests are structural and signs are decided exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Rational = Fraction
Number = Union[int, Fraction, "GoldenElem", "TowerElem"]


class RadicandMismatch(ValueError):
    """Raised when combining tower elements over different radicands."""


def to_fraction(x: int | str | Fraction) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"cannot convert {x!r} to a rational")


def rational_arith(x: Fraction, y: Fraction, op: str) -> Fraction:
    """Exact ``x op y``.  ``op`` is one of add, sub, mul, div."""
    x, y = to_fraction(x), to_fraction(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise ZeroDivisionError("rational division by zero")
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Return the non-negative square root of ``x`` if it is rational."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _sign_sqrt5(u: Fraction, v: Fraction) -> int:
    """Sign of u + v*sqrt(5)."""
    su = (u > 0) - (u < 0)
    sv = (v > 0) - (v < 0)
    if sv == 0 or su == sv:
        return su
    if su == 0:
        return sv
    d = u * u - 5 * v * v
    return su if d > 0 else sv


def _coerce(x) -> "GoldenElem | None":
    if isinstance(x, GoldenElem):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return GoldenElem(0, x)
    return None


@dataclass(frozen=True, eq=False)
class GoldenElem:
    """The element ``a*phi + b`` of Q(sqrt 5), phi = (1 + sqrt 5)/2."""

    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", to_fraction(self.a))
        object.__setattr__(self, "b", to_fraction(self.b))

    @classmethod
    def from_sqrt5(cls, u, v) -> GoldenElem:
        """Build ``u + v*sqrt(5)``; sqrt(5) = 2*phi - 1."""
        u, v = to_fraction(u), to_fraction(v)
        return cls(2 * v, u - v)

    def to_sqrt5(self) -> tuple[Fraction, Fraction]:
        """Return ``(u, v)`` with ``self = u + v*sqrt(5)``."""
        return self.a / 2 + self.b, self.a / 2

    def is_rational(self) -> bool:
        return self.a == 0

    def conjugate(self) -> GoldenElem:
        # phi -> 1 - phi
        return GoldenElem(-self.a, self.a + self.b)

    def norm(self) -> Fraction:
        return self.b * self.b + self.a * self.b - self.a * self.a

    def sign(self) -> int:
        return _sign_sqrt5(*self.to_sqrt5())

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        if self.a == 0:
            return hash(self.b)
        return hash((self.a, self.b))

    def __lt__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __neg__(self) -> GoldenElem:
        return GoldenElem(-self.a, -self.b)

    def __pos__(self) -> GoldenElem:
        return self

    def __abs__(self) -> GoldenElem:
        return -self if self.sign() < 0 else self

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GoldenElem(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return GoldenElem(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.a, self.b, o.a, o.b
        # phi^2 = phi + 1
        return GoldenElem(a * c + a * d + b * c, a * c + b * d)

    __rmul__ = __mul__

    def inverse(self) -> GoldenElem:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by the zero golden element")
        c = self.conjugate()
        return GoldenElem(c.a / n, c.b / n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> GoldenElem:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        out = GoldenElem(0, 1)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __repr__(self) -> str:
        return f"GoldenElem({self.a}, {self.b})"

    def __str__(self) -> str:
        return format_golden(self)


PHI = GoldenElem(1, 0)
SQRT5 = GoldenElem(2, -1)


def golden_arith(x: GoldenElem, y: GoldenElem, op: str) -> GoldenElem:
    """Exact ``x op y`` in Q(sqrt 5).  ``op`` is one of add, sub, mul, div."""
    x, y = _coerce(x), _coerce(y)
    if x is None or y is None:
        raise TypeError("golden_arith expects golden or rational operands")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def golden_sqrt(z: GoldenElem) -> GoldenElem | None:
    """Non-negative square root of ``z`` when it lies in Q(sqrt 5), else None."""
    z = _coerce(z)
    u, v = z.to_sqrt5()
    if v == 0:
        if u < 0:
            return None
        s = rational_sqrt(u)
        if s is not None:
            return GoldenElem(0, s)
        s = rational_sqrt(5 * u)
        if s is not None:
            return GoldenElem.from_sqrt5(0, s / 5)
        return None
    # (x + y sqrt5)^2 = x^2 + 5y^2 + 2xy sqrt5
    t = rational_sqrt(u * u - 5 * v * v)
    if t is None:
        return None
    for x2 in ((u + t) / 2, (u - t) / 2):
        x = rational_sqrt(x2)
        if not x:
            continue
        y = v / (2 * x)
        if x * x + 5 * y * y == u:
            root = GoldenElem.from_sqrt5(x, y)
            return -root if root.sign() < 0 else root
    return None


def _squarefree_part(m: int, limit: int = 10_000) -> tuple[int, int]:
    """Split ``m > 0`` as ``k*k*s``; returns ``(k, s)``.  Trial division up to ``limit``."""
    k = 1
    p = 2
    while p <= limit and p * p <= m:
        while m % (p * p) == 0:
            m //= p * p
            k *= p
        p += 1 if p == 2 else 2
    r = isqrt(m)
    if r * r == m:
        k, m = k * r, 1
    return k, m



@dataclass(frozen=True, eq=False)
class TowerElem:
    """The element ``p + q*sqrt(r)`` with ``p, q, r`` in Q(sqrt 5), ``r >= 0``.

    Construction normalizes: a radicand that is a square in Q(sqrt 5) is
    absorbed into ``p``; rational radicands are reduced to squarefree integers;
    ``q = 0`` forces ``r = 0``.  After that ``sqrt(r)`` is irrational over
    Q(sqrt 5) whenever ``q != 0``.
    """

    p: GoldenElem
    q: GoldenElem
    r: GoldenElem

    def __post_init__(self):
        p, q, r = _coerce(self.p), _coerce(self.q), _coerce(self.r)
        if p is None or q is None or r is None:
            raise TypeError("tower components must be golden or rational")
        if not q or not r:
            q, r = GoldenElem(0, 0), GoldenElem(0, 0)
        else:
            if r.sign() < 0:
                raise ValueError(f"negative radicand {r}")
            if r.is_rational():
                n, d = r.b.numerator, r.b.denominator
                k, s = _squarefree_part(n * d)
                q = q * Fraction(k, d)
                r = GoldenElem(0, s)
            s = golden_sqrt(r)
            if s is not None:
                p, q, r = p + q * s, GoldenElem(0, 0), GoldenElem(0, 0)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    @classmethod
    def lift(cls, x, r: GoldenElem | None = None) -> TowerElem:
        if isinstance(x, TowerElem):
            return x
        g = _coerce(x)
        if g is None:
            raise TypeError(f"cannot lift {x!r} into a tower")
        return cls(g, 0, 0 if r is None else r)

    def is_golden(self) -> bool:
        return not self.q

    def as_golden(self) -> GoldenElem:
        if self.q:
            raise ValueError(f"{self} is not in Q(sqrt 5)")
        return self.p

    def conjugate(self) -> TowerElem:
        return TowerElem(self.p, -self.q, self.r)

    def sign(self) -> int:
        sp, sq = self.p.sign(), self.q.sign()
        if sq == 0 or sp == sq:
            return sp
        if sp == 0:
            return sq
        d = self.p * self.p - self.q * self.q * self.r
        s = d.sign()
        return sp if s > 0 else sq if s < 0 else 0

    def __bool__(self) -> bool:
        return bool(self.p) or bool(self.q)

    def _pair(self, other) -> tuple[TowerElem, TowerElem] | None:
        if isinstance(other, TowerElem):
            o = other
        else:
            g = _coerce(other)
            if g is None:
                return None
            o = TowerElem(g, 0, 0)
        if self.q and o.q and self.r != o.r:
            raise RadicandMismatch(f"radicands differ: {self.r} vs {o.r}")
        return self, o

    def _radicand(self, o: TowerElem) -> GoldenElem:
        return self.r if self.q else o.r

    def __add__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return TowerElem(x.p + y.p, x.q + y.q, x._radicand(y))

    __radd__ = __add__

    def __neg__(self) -> TowerElem:
        return TowerElem(-self.p, -self.q, self.r)

    def __pos__(self) -> TowerElem:
        return self

    def __abs__(self) -> TowerElem:
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return TowerElem(x.p - y.p, x.q - y.q, x._radicand(y))

    def __rsub__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return TowerElem(y.p - x.p, y.q - x.q, x._radicand(y))

    def __mul__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        r = x._radicand(y)
        return TowerElem(x.p * y.p + x.q * y.q * r, x.p * y.q + x.q * y.p, r)

    __rmul__ = __mul__

    def inverse(self) -> TowerElem:
        if not self:
            raise ZeroDivisionError("division by the zero tower element")
        d = self.p * self.p - self.q * self.q * self.r
        return TowerElem(self.p / d, -self.q / d, self.r)

    def __truediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return x * y.inverse()

    def __rtruediv__(self, other):
        pair = self._pair(other)
        if pair is None:
            return NotImplemented
        x, y = pair
        return y * x.inverse()

    def __pow__(self, n: int) -> TowerElem:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        out = TowerElem(1, 0, 0)
        for _ in range(abs(n)):
            out = out * base
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, (TowerElem, GoldenElem, int, Fraction)):
            return NotImplemented
        return value_eq(self, other)

    def __hash__(self) -> int:
        if not self.q:
            return hash(self.p)
        # truncated decimals depend only on the value, not the representation
        from .approx import eval_decimal

        return hash(eval_decimal(self, 15).digits)

    def __lt__(self, other) -> bool:
        return compare(self, other) < 0

    def __le__(self, other) -> bool:
        return compare(self, other) <= 0

    def __gt__(self, other) -> bool:
        return compare(self, other) > 0

    def __ge__(self, other) -> bool:
        return compare(self, other) >= 0

    def __repr__(self) -> str:
        return f"TowerElem({self.p!r}, {self.q!r}, {self.r!r})"

    def __str__(self) -> str:
        return format_exact(self)


def tower_arith(x: TowerElem, y: TowerElem, op: str) -> TowerElem:
    """Exact ``x op y`` over a shared radicand.

    Raises :class:`RadicandMismatch` when both operands carry a radical and the
    radicands differ, ``ZeroDivisionError`` on division by zero.
    """
    x, y = TowerElem.lift(x), TowerElem.lift(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def _rebase(x: TowerElem, r: GoldenElem) -> TowerElem | None:
    """Rewrite ``x`` over radicand ``r`` if ``x.r / r`` is a square in Q(sqrt 5)."""
    if not x.q or x.r == r:
        return x
    s = golden_sqrt(x.r / r)
    if s is None:
        return None
    return TowerElem(x.p, x.q * s, r)


def _sub(x, y):
    """Exact ``x - y`` with radicand lifting for tower elements."""
    if isinstance(x, TowerElem) or isinstance(y, TowerElem):
        x, y = TowerElem.lift(x), TowerElem.lift(y)
        if x.q and y.q and x.r != y.r:
            y2 = _rebase(y, x.r)
            if y2 is None:
                raise RadicandMismatch(f"radicands {x.r} and {y.r} are not commensurable")
            y = y2
    return x - y


def sign(x) -> int:
    """Exact sign of a rational, golden or tower element."""
    if isinstance(x, (GoldenElem, TowerElem)):
        return x.sign()
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    certified = getattr(x, "certified_sign", None)
    if certified is not None:
        return certified()
    raise TypeError(f"no sign for {type(x).__name__}")


def compare(x, y) -> int:
    """Sign of ``x - y``, exact when the radicands lift and certified by intervals otherwise.

    Incommensurable radicals are linearly independent, so such values never
    coincide and the interval refinement always terminates.
    """
    try:
        return sign(_sub(x, y))
    except RadicandMismatch:
        from .approx import ApproxReal

        return (ApproxReal.of(x) - ApproxReal.of(y)).certified_sign()


def value_eq(x, y) -> bool:
    """True iff ``x`` and ``y`` denote the same real number.

    Tower elements over different radicands are compared by rewriting one over
    the other's radicand.  When the radicand ratio is not a square in
    Q(sqrt 5), the two radicals are linearly independent and the values differ.
    """
    if isinstance(x, TowerElem) or isinstance(y, TowerElem):
        x, y = TowerElem.lift(x), TowerElem.lift(y)
        if x.q and y.q and x.r != y.r:
            y2 = _rebase(y, x.r)
            if y2 is None:
                return False
            y = y2
        d = x - y
        return not d
    gx, gy = _coerce(x), _coerce(y)
    if gx is None or gy is None:
        raise TypeError(f"cannot compare {type(x).__name__} with {type(y).__name__}")
    return gx == gy


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, GoldenElem, TowerElem)) and not isinstance(x, bool)


# -- formatting and serialization ---------------------------------------------


def rational_str(x: Fraction) -> str:
    """Canonical ``num/den`` string (denominator always present)."""
    x = to_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def format_golden(g: GoldenElem) -> str:
    a, b = g.a, g.b
    if a == 0:
        return str(b)
    if a == 1:
        head = "phi"
    elif a == -1:
        head = "-phi"
    else:
        head = f"{a}*phi"
    if b == 0:
        return head
    if a < 0 and b > 0:
        return f"{b}{head}"
    return f"{head}{'+' if b > 0 else '-'}{abs(b)}"


def _factor(g: GoldenElem) -> str:
    s = format_golden(g)
    return f"({s})" if g.a != 0 and g.b != 0 else s


def format_exact(x) -> str:
    """Human-readable exact form, e.g. ``1+sqrt(2)`` or ``(phi/2...)``."""
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, GoldenElem):
        return format_golden(x)
    if isinstance(x, TowerElem):
        if not x.q:
            return format_golden(x.p)
        rad = f"sqrt({format_golden(x.r)})"
        if x.q == 1:
            term = rad
        elif x.q == -1:
            term = "-" + rad
        else:
            term = f"{_factor(x.q)}*{rad}"
        if not x.p:
            return term
        if term.startswith("-"):
            return f"{_factor(x.p)}{term}"
        return f"{_factor(x.p)}+{term}"
    return str(x)


def to_json(x) -> dict:
    """Serialize an exact element to a JSON-ready dict."""
    if isinstance(x, (int, Fraction)):
        return {"kind": "rational", "value": rational_str(x)}
    if isinstance(x, GoldenElem):
        return {"kind": "golden", "a": rational_str(x.a), "b": rational_str(x.b)}
    if isinstance(x, TowerElem):
        return {"kind": "tower", "p": to_json(x.p), "q": to_json(x.q), "r": to_json(x.r)}
    raise TypeError(f"cannot serialize {type(x).__name__}")


def from_json(d: dict):
    kind = d["kind"]
    if kind == "rational":
        return Fraction(d["value"])
    if kind == "golden":
        return GoldenElem(Fraction(d["a"]), Fraction(d["b"]))
    if kind == "tower":
        return TowerElem(from_json(d["p"]), from_json(d["q"]), from_json(d["r"]))
    raise ValueError(f"unknown kind {kind!r}")
