"""Print the error of every convergent family against its closed-form limit.

For phi, chi and chi' it compares the continued fraction, the nested
radical and (for chi') the H-sequence ratios, step by step.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from decimal import Decimal

from chiratio.approx import eval_decimal
from chiratio.constants import INV_PHI, chi, chi_prime
from chiratio.exact import PHI
from chiratio.rectangles import extend_sequence
from chiratio.sequences import CFConfig, RadicalConfig, cf_convergents, h_ratio_convergence, nested_radical


@dataclass(frozen=True)
class ReportConfig:
    steps: int = 40
    digits: int = 30
    every: int = 5


def error(x, limit: Decimal, digits: int) -> str:
    d = eval_decimal(x, digits).as_decimal() if not isinstance(x, Decimal) else x
    return f"{abs(d - limit):.3e}"


def report(cfg: ReportConfig) -> None:
    families = [("phi", 1, PHI), ("chi", INV_PHI, chi()), ("chi_prime", PHI, chi_prime())]
    for name, t, closed in families:
        limit = eval_decimal(closed, cfg.digits).as_decimal()
        cf = cf_convergents(CFConfig(t, t, cfg.steps))
        rad = nested_radical(RadicalConfig(t, 1, cfg.steps), cfg.digits)
        print(f"{name} = {eval_decimal(closed, 20).digits}")
        print(f"{'k':>4} {'cf error':>12} {'radical error':>14}")
        for k in range(0, cfg.steps, cfg.every):
            print(f"{k + 1:>4} {error(cf[k], limit, cfg.digits):>12} {error(rad[k].as_decimal(), limit, cfg.digits):>14}")
        print()
    limit = eval_decimal(chi_prime(), cfg.digits).as_decimal()
    print("H_{k+1}/H_k against chi_prime")
    for k, r in enumerate(h_ratio_convergence(cfg.steps + 1), 1):
        if k % cfg.every == 1:
            print(f"{k:>4} {error(r, limit, cfg.digits):>12}")
    print()
    root2 = Decimal(2).sqrt()
    print("iterated extension against sqrt2")
    for k, x in enumerate(extend_sequence(cfg.steps)):
        if k % cfg.every == 0:
            print(f"{k:>4} {eval_decimal(x, 12).digits:>16} {error(x, root2, 25):>12}")


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--steps", type=int, default=ReportConfig.steps)
    p.add_argument("--every", type=int, default=ReportConfig.every)
    args = p.parse_args()
    report(ReportConfig(steps=args.steps, every=args.every))


if __name__ == "__main__":
    main()
