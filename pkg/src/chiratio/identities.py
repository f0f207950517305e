"""The exact identity suite run by ``chiratio verify``.  No tolerances anywhere."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .constants import (
    CHI_POLY,
    CHI_PRIME_POLY,
    INV_PHI,
    PHI_POLY,
    chi,
    chi_prime,
    is_irreducible_quartic,
    metallic,
    metallic_poly,
    poly_eval,
    quartic_expand,
    vieta_holds,
)
from .exact import PHI, GoldenElem, value_eq
from .folding import fold_cf_convergents, fold_golden_from, fold_harmonic, fold_reciprocal, FoldState
from .rectangles import extend_ratio, subdivide
from .sequences import CFConfig, cf_convergents, fibonacci_ratios, h_sequence, phi_chain

EXPECTED_H = [(1, 1), (0, 2), (2, 1), (3, 4), (9, 4), (16, 13), (38, 20), (74, 51)]


def _h_matches_expected() -> bool:
    return [(h.a, h.b) for h in h_sequence(8)] == EXPECTED_H


def _h_vs_cf() -> bool:
    hs = h_sequence(13)
    cf = phi_chain(12)
    # the reduced second convergent 2 = 2/1 is the effective predecessor of H_3
    dens = [GoldenElem(0, 1), GoldenElem(0, 1)] + hs[1:11]
    return all(value_eq(cf[k], hs[k] / dens[k]) for k in range(12))


def _fold_vs_cf() -> bool:
    return all(
        fold_cf_convergents(n, 15) == cf_convergents(CFConfig(n, n, 15))
        for n in (1, 2, 3)
    )


def _quartic_mixed() -> bool:
    p = quartic_expand("mixed_signs")
    return (p.is_rational()
            and p.rational_coefficients() == [1, -1, -3, 1, 1]
            and not poly_eval(p, chi())
            and is_irreducible_quartic(p))


def _quartic_same() -> bool:
    p = quartic_expand("same_signs")
    s5 = PHI + INV_PHI
    expected = [GoldenElem(0, 1), s5, GoldenElem(0, -1), -s5, GoldenElem(0, 1)]
    return list(p.coefficients) == expected and value_eq(s5, GoldenElem.from_sqrt5(0, 1))


IDENTITIES: list[tuple[str, Callable[[], bool]]] = [
    ("phi^2 = phi + 1", lambda: PHI * PHI == PHI + 1),
    ("phi root of x^2 - x - 1", lambda: not poly_eval(PHI_POLY, PHI)),
    ("chi root of x^2 - (1/phi)x - 1", lambda: not poly_eval(CHI_POLY, chi())),
    ("chi' root of x^2 - phi x - 1", lambda: not poly_eval(CHI_PRIME_POLY, chi_prime())),
    ("chi = 1/phi + 1/chi", lambda: value_eq(chi(), INV_PHI + 1 / chi())),
    ("chi' = phi + 1/chi'", lambda: value_eq(chi_prime(), PHI + 1 / chi_prime())),
    ("Vieta for chi, -1/chi", lambda: vieta_holds(chi(), CHI_POLY)),
    ("Vieta for chi', -1/chi'", lambda: vieta_holds(chi_prime(), CHI_PRIME_POLY)),
    ("same-sign quartic = x^4 - sqrt5 x^3 - x^2 + sqrt5 x + 1", _quartic_same),
    ("mixed-sign quartic = x^4 + x^3 - 3x^2 - x + 1, irreducible, chi a root", _quartic_mixed),
    ("metallic means 1..10 are roots of x^2 - n x - 1",
     lambda: all(not poly_eval(metallic_poly(n), metallic(n)) for n in range(1, 11))),
    ("(2phi + 2)/(phi + 1) = 2", lambda: value_eq((2 * PHI + 2) / (PHI + 1), 2)),
    ("H sequence starts phi+1, 2, 2phi+1, ..., 74phi+51", _h_matches_expected),
    ("H ratios equal the phi-chain convergents", _h_vs_cf),
    ("Fibonacci ratios equal the continued fraction of phi",
     lambda: [r for _, r in fibonacci_ratios(16)[2:]] == cf_convergents(CFConfig(1, 1, 14))),
    ("fold_cf equals cf_convergents for n = 1, 2, 3", _fold_vs_cf),
    ("harmonic fold (3, 2) gives 5/6 and 12/5", lambda: fold_harmonic(3, 2)[:2] == (Fraction(5, 6), Fraction(12, 5))),
    ("golden fold from 1 gives Fibonacci ratios",
     lambda: [fold_golden_from(1, k)[0] for k in range(1, 4)] == [Fraction(3, 2), Fraction(5, 3), Fraction(8, 5)]),
    ("reciprocal fold is an involution",
     lambda: fold_reciprocal(fold_reciprocal(FoldState(Fraction(7, 3)))).length == Fraction(7, 3)),
    ("extend(2, above) = 1 + sqrt2", lambda: value_eq(extend_ratio(2, "above_phi"), metallic(2))),
    ("extend(3/2, above) = 2", lambda: value_eq(extend_ratio(Fraction(3, 2), "above_phi"), 2)),
    ("extend(phi, below) = chi", lambda: value_eq(extend_ratio(PHI, "below_phi"), chi())),
    ("subdivide(phi) keeps a unit square", lambda: value_eq(subdivide(PHI).kept.length, 1)),
    ("subdivide(chi) keeps a golden rectangle", lambda: value_eq(subdivide(chi()).kept.length, INV_PHI)),
]


def run_identities() -> list[tuple[str, bool]]:
    results = []
    for name, check in IDENTITIES:
        try:
            ok = bool(check())
        except Exception:  # a crash is a failure, reported by name
            ok = False
        results.append((name, ok))
    return results
