"""Closed forms for phi, chi, chi-prime and the metallic means, plus polynomial tools."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

from .approx import DecimalApprox, eval_decimal
from .exact import PHI, GoldenElem, TowerElem, format_exact, is_exact, sign, to_json, value_eq

INV_PHI = PHI - 1


@dataclass(frozen=True)
class Poly:
    """Polynomial with exact coefficients, lowest degree first."""

    coefficients: tuple

    def __post_init__(self):
        cs = list(self.coefficients)
        while len(cs) > 1 and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    @classmethod
    def descending(cls, *coeffs) -> Poly:
        return cls(tuple(reversed(coeffs)))

    @property
    def degree(self) -> int:
        if len(self.coefficients) == 1 and not self.coefficients[0]:
            return -1
        return len(self.coefficients) - 1

    def descending_coefficients(self) -> list:
        return list(reversed(self.coefficients))

    def __mul__(self, other: Poly) -> Poly:
        out = [GoldenElem(0, 0)] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] = out[i + j] + a * b
        return Poly(tuple(out))

    def map(self, fn) -> Poly:
        return Poly(tuple(fn(c) for c in self.coefficients))

    def is_rational(self) -> bool:
        """All coefficients lie in Q (no phi component)."""
        for c in self.coefficients:
            if isinstance(c, TowerElem):
                if c.q or c.p.a:
                    return False
            elif isinstance(c, GoldenElem) and c.a:
                return False
        return True

    def rational_coefficients(self) -> list[Fraction]:
        if not self.is_rational():
            raise ValueError("polynomial has irrational coefficients")
        out = []
        for c in self.coefficients:
            if isinstance(c, TowerElem):
                c = c.p
            out.append(c.b if isinstance(c, GoldenElem) else Fraction(c))
        return out

    def __str__(self) -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coefficients[k]
            if not c:
                continue
            cs = format_exact(c)
            if k and cs in ("1", "-1"):
                cs = cs[:-1]
            elif k and not (isinstance(c, (int, Fraction)) or (isinstance(c, GoldenElem) and c.a == 0)):
                cs = f"({cs})"
            mono = "" if k == 0 else "x" if k == 1 else f"x^{k}"
            terms.append(f"{cs}{mono}" if k else cs)
        return " + ".join(terms).replace("+ -", "- ") or "0"


def poly_eval(p: Poly, x):
    """Exact Horner evaluation of ``p`` at ``x``."""
    acc = GoldenElem(0, 0)
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def monic_quadratic(linear, constant) -> Poly:
    """``x^2 + linear*x + constant``."""
    return Poly((GoldenElem(0, 0) + constant, GoldenElem(0, 0) + linear, GoldenElem(0, 1)))


def phi() -> GoldenElem:
    return PHI


def chi() -> TowerElem:
    """Bartlett's chi ratio, the positive root of x^2 - (1/phi)x - 1."""
    return TowerElem(
        GoldenElem.from_sqrt5(Fraction(-1, 4), Fraction(1, 4)),
        Fraction(1, 4),
        GoldenElem.from_sqrt5(22, -2),
    )


def chi_prime() -> TowerElem:
    """Companion constant, the positive root of x^2 - phi*x - 1."""
    return TowerElem(
        GoldenElem.from_sqrt5(Fraction(1, 4), Fraction(1, 4)),
        Fraction(1, 4),
        GoldenElem.from_sqrt5(22, 2),
    )


def metallic(n: int):
    """Positive root of x^2 - n x - 1.  Returns phi itself for n = 1."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"metallic mean needs a positive integer, got {n!r}")
    if n == 1:
        return PHI
    # (n + sqrt(n^2 + 4)) / 2 over the rationals; collapses when sqrt lands in Q(sqrt 5)
    t = TowerElem(Fraction(n, 2), Fraction(1, 2), n * n + 4)
    return t.p if t.is_golden() else t


def sqrt2() -> TowerElem:
    return TowerElem(0, 1, 2)


CHI_POLY = monic_quadratic(-INV_PHI, -1)
CHI_PRIME_POLY = monic_quadratic(-PHI, -1)
PHI_POLY = monic_quadratic(-1, -1)


def metallic_poly(n: int) -> Poly:
    return monic_quadratic(-n, -1)


Pairing = Literal["same_signs", "mixed_signs"]


def _pair_quadratic(root, other_root) -> Poly:
    """Expand (x - root)(x - other_root) inside the root's tower; coefficients must be golden."""
    s = root + other_root
    pr = root * other_root
    for c in (s, pr):
        if not (isinstance(c, GoldenElem) or c.is_golden()):
            raise ArithmeticError(f"pair coefficient {c} left Q(sqrt 5)")
    g = lambda c: c if isinstance(c, GoldenElem) else c.as_golden()  # noqa: E731
    return Poly((g(pr), -g(s), GoldenElem(0, 1)))


def quartic_expand(pairing: Pairing) -> Poly:
    """Expand the four-factor product built from chi and chi-prime.

    ``same_signs``:  (x - chi)(x + 1/chi)(x - chi')(x + 1/chi')
    ``mixed_signs``: (x - chi)(x + 1/chi)(x + chi')(x - 1/chi')

    Each pair is multiplied out inside its own radical tower, where the
    radical cancels, and the two golden quadratics are then multiplied.
    """
    c, cp = chi(), chi_prime()
    first = _pair_quadratic(c, -1 / c)
    if pairing == "same_signs":
        second = _pair_quadratic(cp, -1 / cp)
    elif pairing == "mixed_signs":
        second = _pair_quadratic(-cp, 1 / cp)
    else:
        raise ValueError(f"unknown pairing {pairing!r}")
    return first * second


def _integer_quadratic_factorizations(coeffs: Sequence[int], bound: int = 3) -> list[tuple]:
    """Search (x^2 + a x + b)(x^2 + c x + d) = monic quartic with |a|,|b|,|c|,|d| <= bound."""
    c0, c1, c2, c3, c4 = coeffs
    assert c4 == 1
    found = []
    rng = range(-bound, bound + 1)
    for a in rng:
        for b in rng:
            for c in rng:
                for d in rng:
                    if (b * d == c0 and a * d + b * c == c1 and b + d + a * c == c2 and a + c == c3):
                        found.append((a, b, c, d))
    return found


def is_irreducible_quartic(p: Poly, bound: int = 3) -> bool:
    """No root at +-1 and no integer quadratic split with small coefficients."""
    cs = [int(c) for c in p.rational_coefficients()]
    if len(cs) != 5 or cs[-1] != 1 or abs(cs[0]) != 1:
        raise ValueError("expected a monic integer quartic with unit constant term")
    q = Poly(tuple(GoldenElem(0, c) for c in cs))
    if any(not poly_eval(q, r) for r in (1, -1)):
        return False
    return not _integer_quadratic_factorizations(cs, bound)


@dataclass(frozen=True)
class NamedConstant:
    name: str
    value: object
    description: str
    defining: Poly | None = field(default=None, compare=False)

    @property
    def exact(self) -> bool:
        return is_exact(self.value)

    def decimal(self, digits: int) -> str:
        if isinstance(self.value, DecimalApprox):
            d = self.value.digits
            places = len(d.split(".")[1]) if "." in d else 0
            if digits > places:
                raise ValueError(f"{self.name} is only known to {places} places")
            return d[: len(d) - (places - digits)] if digits < places else d
        return eval_decimal(self.value, digits).digits

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "value_decimal_10": self.decimal(10),
            "exact": to_json(self.value) if self.exact else None,
            "description": self.description,
        }


def _display(digits: str, bound: Fraction) -> DecimalApprox:
    return DecimalApprox(digits, bound, len(digits.split(".")[1]))


def named_constants() -> list[NamedConstant]:
    return [
        NamedConstant("phi", PHI, "golden ratio (1+sqrt5)/2; a phi rectangle splits into a square and a similar rectangle", PHI_POLY),
        NamedConstant("chi", chi(), "Bartlett's chi ratio; a chi rectangle splits into a golden rectangle and a similar rectangle", CHI_POLY),
        NamedConstant("chi_prime", chi_prime(), "Bartlett's chi-prime; the phi-by-1 golden rectangle extended by a similar rectangle", CHI_PRIME_POLY),
        NamedConstant("silver", metallic(2), "silver section 1+sqrt2, metallic mean of order 2", metallic_poly(2)),
        NamedConstant("bronze", metallic(3), "bronze mean (3+sqrt13)/2, metallic mean of order 3", metallic_poly(3)),
        NamedConstant("sqrt2", sqrt2(), "DIN A4 proportion; fixed point of iterated proportional extension", monic_quadratic(0, -2)),
        NamedConstant("sesquitertia", Fraction(4, 3), "classical 4:3 proportion", Poly((GoldenElem(0, -4), GoldenElem(0, 3)))),
        # display-only: defining equations deliberately not implemented
        NamedConstant("plastic", _display("1.3247179572", Fraction(9, 10**11)), "van der Laan's plastic number (display only)"),
        NamedConstant("cordovan", _display("1.3065629648", Fraction(9, 10**11)), "de la Hoz's Cordovan proportion (display only)"),
    ]


def lookup(name: str) -> NamedConstant:
    for c in named_constants():
        if c.name == name:
            return c
    raise KeyError(name)


def residual(c: NamedConstant):
    """Exact value of the defining polynomial at the constant."""
    if c.defining is None or not c.exact:
        raise ValueError(f"{c.name} has no exact defining polynomial")
    return poly_eval(c.defining, c.value)


def vieta_holds(root, poly: Poly) -> bool:
    """``root`` and ``-1/root`` are the two roots of the monic quadratic ``poly``."""
    const, lin, lead = poly.coefficients
    other = -1 / root
    return value_eq(root + other, -lin) and value_eq(root * other, const) and sign(root) > 0
