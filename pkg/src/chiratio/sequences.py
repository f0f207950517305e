"""Convergent generators: continued fractions, Fibonacci ratios, the H sequence, nested radicals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .approx import ApproxReal, DecimalApprox, Interval, eval_decimal, interval_of
from .exact import PHI, GoldenElem, TowerElem, sign, to_fraction

Field = Union[Fraction, GoldenElem]

# H terms are golden elements a*phi + b
HTerm = GoldenElem


def _field(x) -> Field:
    if isinstance(x, TowerElem):
        if not x.is_golden():
            return x
        x = x.p
    if isinstance(x, GoldenElem):
        return x.b if x.a == 0 else x
    return to_fraction(x)


@dataclass(frozen=True)
class CFConfig:
    """Periodic continued fraction ``term + 1/(term + 1/(... + 1/seed))``.

    ``seed`` is the innermost value, so the first convergent is
    ``term + 1/seed``.
    """

    term: Field
    seed: Field
    count: int

    def __post_init__(self):
        object.__setattr__(self, "term", _field(self.term))
        object.__setattr__(self, "seed", _field(self.seed))
        if sign(self.term) <= 0 or sign(self.seed) <= 0:
            raise ValueError("term and seed must be positive")
        if self.count < 1:
            raise ValueError("count must be positive")


def cf_convergents(cfg: CFConfig) -> list[Field]:
    out = []
    c = cfg.seed
    for _ in range(cfg.count):
        c = cfg.term + 1 / c
        out.append(_field(c))
    return out


def fibonacci_ratios(count: int) -> list[tuple[int, Fraction | None]]:
    """Pairs ``(F_k, F_k / F_{k-1})`` for k = 1..count, seeds F_1 = F_2 = 1.

    The first entry has no ratio.
    """
    if count < 1:
        raise ValueError("count must be positive")
    fs = [1, 1][:count]
    while len(fs) < count:
        fs.append(fs[-1] + fs[-2])
    return [(f, None if k == 0 else Fraction(f, fs[k - 1])) for k, f in enumerate(fs)]


H_SEEDS = (GoldenElem(1, 1), GoldenElem(0, 2))


def h_step(prev: GoldenElem, cur: GoldenElem) -> GoldenElem:
    """(a phi + b), (c phi + d) -> (a + c + d) phi + (b + c), i.e. prev + phi*cur."""
    return GoldenElem(prev.a + cur.a + cur.b, prev.b + cur.a)


def h_sequence(count: int) -> list[HTerm]:
    """H_1 = phi + 1, H_2 = 2, then the hybrid rule.

    The seed 2 is the reduced form of the second convergent (2phi + 2)/(phi + 1),
    so its predecessor in the rule is 1, not phi + 1.  That is what makes
    H_3 = 2phi + 1 and keeps H_{k+1}/H_k equal to the phi-chain convergents.
    """
    if count < 2:
        raise ValueError("count must be at least 2")
    terms = list(H_SEEDS)
    prev, cur = GoldenElem(0, 1), terms[1]
    while len(terms) < count:
        prev, cur = cur, h_step(prev, cur)
        terms.append(cur)
    return terms


def h_ratio_convergence(count: int) -> list[GoldenElem]:
    """Exact ratios H_{k+1}/H_k for k = 1..count-1; they approach chi-prime."""
    if count < 3:
        raise ValueError("count must be at least 3")
    hs = h_sequence(count)
    return [hs[k + 1] / hs[k] for k in range(count - 1)]


def h_sequence_alt_rule(count: int) -> list[HTerm]:
    """Same seeds, Fibonacci-style componentwise sum; ratios approach phi."""
    if count < 2:
        raise ValueError("count must be at least 2")
    terms = list(H_SEEDS)
    while len(terms) < count:
        terms.append(terms[-2] + terms[-1])
    return terms


def phi_chain(count: int) -> list[Field]:
    """phi + 1, phi + 1/(phi + 1), ...: the continued fraction for chi-prime."""
    return cf_convergents(CFConfig(PHI, 1, count))


@dataclass(frozen=True)
class RadicalConfig:
    """Iteration x -> sqrt(1 + coefficient * x) from ``start``, ``count`` times."""

    coefficient: Field
    start: Field
    count: int

    def __post_init__(self):
        object.__setattr__(self, "coefficient", _field(self.coefficient))
        object.__setattr__(self, "start", _field(self.start))
        if sign(self.coefficient) <= 0:
            raise ValueError("coefficient must be positive")
        if sign(self.start) < 0:
            raise ValueError("start must be non-negative")
        if self.count < 1:
            raise ValueError("count must be positive")


def radical_intervals(cfg: RadicalConfig, bits: int) -> list[Interval]:
    c = interval_of(cfg.coefficient, bits + 8)
    x = interval_of(cfg.start, bits + 8)
    out = []
    for _ in range(cfg.count):
        x = (1 + c * x).round_out(bits + 8).sqrt(bits + 4)
        out.append(x)
    return out


def radical_iterates(cfg: RadicalConfig) -> list[ApproxReal]:
    """Each iterate as an :class:`ApproxReal` (enclosures at any precision)."""
    runs: dict[int, list[Interval]] = {}

    def run(bits: int) -> list[Interval]:
        if bits not in runs:
            runs[bits] = radical_intervals(cfg, bits)
        return runs[bits]

    return [ApproxReal(lambda bits, j=j: run(bits)[j], f"radical[{j + 1}]") for j in range(cfg.count)]


def nested_radical(cfg: RadicalConfig, digits: int = 10) -> list[DecimalApprox]:
    """Guaranteed truncated decimals of x_1 .. x_count."""
    return [eval_decimal(x, digits) for x in radical_iterates(cfg)]
