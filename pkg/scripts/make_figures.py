"""Write every figure of the project as SVG into one directory.

    python scripts/make_figures.py --out figures
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from chiratio.constants import chi, chi_prime, phi
from chiratio.folding import fold_cf, fold_golden_from, fold_harmonic
from chiratio.rectangles import extend_ratio
from chiratio.render import (
    Style,
    render_construction,
    render_extend_sequence,
    render_fold_trace,
    render_subdivision,
)


@dataclass(frozen=True)
class FigureConfig:
    out: Path = Path("figures")
    unit_px: int = 100
    extend_count: int = 6
    fold_n: int = 3
    fold_depth: int = 2
    golden_start: Fraction = Fraction(7)
    golden_depth: int = 3


def figures(cfg: FigureConfig) -> dict[str, str]:
    style = Style(unit_px=cfg.unit_px)
    return {
        "subdivision_phi": render_subdivision(phi(), style),
        "subdivision_chi": render_subdivision(chi(), style),
        "subdivision_chi_prime": render_subdivision(chi_prime(), style),
        "construction_phi": render_construction("phi", style),
        "construction_chi": render_construction("chi", style),
        "below_phi_rho_3_2": render_subdivision(extend_ratio(Fraction(3, 2), "below_phi"), style),
        "above_phi_rho_3_2": render_subdivision(extend_ratio(Fraction(3, 2), "above_phi"), style),
        "silver": render_subdivision(extend_ratio(2, "above_phi"), style),
        "extend_sequence": render_extend_sequence(cfg.extend_count, style),
        "fold_silver": render_fold_trace(fold_cf(2, cfg.fold_depth)[1], style),
        "fold_cf": render_fold_trace(fold_cf(cfg.fold_n, cfg.fold_depth)[1], style),
        "fold_harmonic": render_fold_trace(fold_harmonic(3, 2)[2], style),
        "fold_golden": render_fold_trace(fold_golden_from(cfg.golden_start, cfg.golden_depth)[1], style),
    }


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=FigureConfig.out)
    p.add_argument("--unit-px", type=int, default=FigureConfig.unit_px)
    args = p.parse_args()
    cfg = FigureConfig(out=args.out, unit_px=args.unit_px)
    cfg.out.mkdir(parents=True, exist_ok=True)
    for name, svg in figures(cfg).items():
        path = cfg.out / f"{name}.svg"
        path.write_text(svg, encoding="utf-8")
        print(path)


if __name__ == "__main__":
    main()
