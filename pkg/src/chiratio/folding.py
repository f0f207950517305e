"""Exact simulation of the folding moves on a width-1 strip.

Only two physical moves exist: the diagonal/perpendicular fold (length x
becomes 1/x) and folding a unit square onto the strip (x becomes x + 1).
Laying a second, separately folded strip alongside is recorded as an
``append`` step.  Every move is logged in a :class:`FoldTrace`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import rational_str, to_fraction

RECIPROCAL = "reciprocal"
SQUARE = "square"
APPEND = "append"


@dataclass(frozen=True)
class FoldStep:
    op: str
    before: Fraction
    after: Fraction
    operand: Fraction | None = None

    def to_json(self) -> dict:
        d = {"op": self.op, "before": rational_str(self.before), "after": rational_str(self.after)}
        if self.operand is not None:
            d["operand"] = rational_str(self.operand)
        return d

    @classmethod
    def from_json(cls, d: dict) -> FoldStep:
        operand = d.get("operand")
        return cls(d["op"], Fraction(d["before"]), Fraction(d["after"]),
                   None if operand is None else Fraction(operand))


def apply_step(op: str, x: Fraction, operand: Fraction | None = None) -> Fraction:
    if op == RECIPROCAL:
        return 1 / x
    if op == SQUARE:
        return x + 1
    if op == APPEND:
        return x + operand
    raise ValueError(f"unknown fold {op!r}")


@dataclass(frozen=True)
class FoldTrace:
    steps: tuple[FoldStep, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.steps, self.steps[1:]):
            if a.after != b.before:
                raise ValueError(f"broken trace: {a.after} then {b.before}")

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def append(self, step: FoldStep) -> FoldTrace:
        return FoldTrace(self.steps + (step,))

    @property
    def start(self) -> Fraction:
        return self.steps[0].before

    @property
    def final(self) -> Fraction:
        return self.steps[-1].after

    def replay(self, start: Fraction | None = None) -> Fraction:
        """Re-execute the moves from ``start`` (default: the recorded start)."""
        x = self.start if start is None else to_fraction(start)
        for s in self.steps:
            x = apply_step(s.op, x, s.operand)
        return x

    def to_jsonl(self) -> str:
        return "".join(json.dumps(s.to_json()) + "\n" for s in self.steps)

    @classmethod
    def from_jsonl(cls, text: str) -> FoldTrace:
        return cls(tuple(FoldStep.from_json(json.loads(line)) for line in text.splitlines() if line.strip()))


@dataclass(frozen=True)
class FoldState:
    length: Fraction
    trace: FoldTrace = field(default_factory=FoldTrace)

    def __post_init__(self):
        object.__setattr__(self, "length", to_fraction(self.length))
        if self.length <= 0:
            raise ValueError("strip length must be positive")

    def _do(self, op: str, operand: Fraction | None = None) -> FoldState:
        after = apply_step(op, self.length, operand)
        return FoldState(after, self.trace.append(FoldStep(op, self.length, after, operand)))


def fold_reciprocal(s: FoldState) -> FoldState:
    return s._do(RECIPROCAL)


def fold_add_squares(s: FoldState, n: int) -> FoldState:
    if n < 1:
        raise ValueError("need at least one square")
    for _ in range(n):
        s = s._do(SQUARE)
    return s


def fold_append(s: FoldState, other: FoldState) -> FoldState:
    """Lay the strip ``other`` alongside ``s``; lengths add."""
    return s._do(APPEND, other.length)


def fold_cf(n: int, depth: int) -> tuple[Fraction, FoldTrace]:
    """Fold n + 1/(n + 1/(... + 1/n)) with ``depth`` reciprocal folds."""
    if n < 1 or depth < 1:
        raise ValueError("n and depth must be positive")
    s = FoldState(Fraction(1))
    if n > 1:
        s = fold_add_squares(s, n - 1)
    for _ in range(depth):
        s = fold_add_squares(fold_reciprocal(s), n)
    return s.length, s.trace


def fold_cf_convergents(n: int, depth: int) -> list[Fraction]:
    """Strip lengths of :func:`fold_cf` at depths 1..depth."""
    return [fold_cf(n, k)[0] for k in range(1, depth + 1)]


def fold_harmonic(m, n) -> tuple[Fraction, Fraction, FoldTrace]:
    """Fold 1/m + 1/n = (m + n)/(m n); returns it with H = 2/(1/m + 1/n)."""
    m, n = to_fraction(m), to_fraction(n)
    if m <= 0 or n <= 0:
        raise ValueError("m and n must be positive")
    a = fold_reciprocal(FoldState(m))
    b = fold_reciprocal(FoldState(n))
    s = fold_append(a, b)
    return s.length, 2 / s.length, s.trace


def fold_golden_from(x, depth: int) -> tuple[Fraction, FoldTrace]:
    """y_0 = 1 + x, y_{k+1} = 1 + 1/y_k, each step a reciprocal fold plus one square."""
    x = to_fraction(x)
    if x <= 0 or depth < 1:
        raise ValueError("x and depth must be positive")
    s = fold_add_squares(FoldState(x), 1)
    for _ in range(depth):
        s = fold_add_squares(fold_reciprocal(s), 1)
    return s.length, s.trace
