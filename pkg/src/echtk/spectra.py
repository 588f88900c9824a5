"""Action and linking spectra, Weyl-law error terms, cobordism
obstructions, and the two quantitative dynamics bounds.

Square roots are evaluated in fixed-point integer arithmetic so that sign
and tolerance claims never depend on floating-point rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .currents import KnotParams
from .exact import InfRat
from .nseq import nk_upto

_GUARD = 6  # extra decimal digits carried through fixed-point roots


def sqrt_decimal(value: Fraction | int, digits: int = 12) -> str:
    """Decimal string of sqrt(value) rounded to the given digits."""
    value = Fraction(value)
    if value < 0:
        raise ValueError("square root of a negative value")
    a, b = value.numerator, value.denominator
    scale = 10 ** (digits + _GUARD)
    # sqrt(a/b) = sqrt(a*b)/b
    root = isqrt(a * b * scale * scale) // b
    return _fixed_to_str(root, digits + _GUARD, digits)


def _fixed_to_str(scaled: int, scale_digits: int, digits: int) -> str:
    """Round a fixed-point integer down from scale_digits to digits."""
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    drop = scale_digits - digits
    scaled = (scaled + 5 * 10 ** (drop - 1)) // 10**drop if drop else scaled
    unit = 10**digits
    return f"{sign}{scaled // unit}.{scaled % unit:0{digits}d}"


def _weyl_error_scaled(kp: KnotParams, k: int, value: int, digits: int) -> int:
    """(N_k - sqrt(2*k*p*q)) / (p*q) in fixed point with the given digits."""
    scale = 10**digits
    root = isqrt(2 * k * kp.pq * scale * scale)
    return (value * scale - root) // kp.pq


def weyl_error_str(kp: KnotParams, k: int, value: int, digits: int = 12) -> str:
    scaled = _weyl_error_scaled(kp, k, value, digits + _GUARD)
    return _fixed_to_str(scaled, digits + _GUARD, digits)


def weyl_error_within(kp: KnotParams, k: int, value: int, bound: Fraction) -> bool:
    """Exact check that |N_k/pq - sqrt(2k/pq)| <= bound, done by squaring."""
    # |value - sqrt(t)| <= c with t = 2*k*pq and c = bound*pq
    t = 2 * k * kp.pq
    c = Fraction(bound) * kp.pq
    if c.denominator == 1:
        ci = c.numerator
        return (value + ci) ** 2 >= t and (value - ci <= 0 or (value - ci) ** 2 <= t)
    upper = (value + c) ** 2 >= t
    lower = value - c <= 0 or (value - c) ** 2 <= t
    return upper and lower


@dataclass(frozen=True)
class SpectrumEntry:
    k: int
    ck: Fraction
    ck_link: InfRat
    weyl_error: str


def action_spectrum(kp: KnotParams, k_max: int) -> list[SpectrumEntry]:
    """c_k = N_k(p,q)/pq for k = 0..k_max, with linking levels and Weyl
    error terms attached."""
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    values = nk_upto(kp.p, kp.q, k_max)
    entries: list[SpectrumEntry] = []
    run_start = 0
    for k, value in enumerate(values):
        if k and value != values[k - 1]:
            run_start = k
        repeats = k - run_start + 1
        entries.append(
            SpectrumEntry(
                k=k,
                ck=Fraction(value, kp.pq),
                ck_link=InfRat(value, repeats - 1),
                weyl_error=weyl_error_str(kp, k, value),
            )
        )
    return entries


def linking_spectrum(kp: KnotParams, k_max: int, rot: str = "pq_plus_delta") -> list[InfRat]:
    """Threshold levels of the knot filtration per index.

    ``rot='exact_pq'`` gives the rational levels N_k; ``'pq_plus_delta'``
    adds the infinitesimal repeat correction delta*(repeats - 1).
    """
    if rot not in ("exact_pq", "pq_plus_delta"):
        raise ValueError(f"unknown rotation mode {rot!r}")
    values = nk_upto(kp.p, kp.q, k_max)
    out: list[InfRat] = []
    run_start = 0
    for k, value in enumerate(values):
        if k and value != values[k - 1]:
            run_start = k
        repeats = k - run_start + 1
        out.append(InfRat(value, 0 if rot == "exact_pq" else repeats - 1))
    return out


def weyl_scan(kp: KnotParams, k_max: int, digits: int = 12) -> tuple[list[tuple[int, str]], str]:
    """Error terms e_k for k = 0..k_max and the supremum of |e_k|."""
    values = nk_upto(kp.p, kp.q, k_max)
    scale_digits = digits + _GUARD
    entries: list[tuple[int, str]] = []
    sup_scaled = 0
    for k, value in enumerate(values):
        scaled = _weyl_error_scaled(kp, k, value, scale_digits)
        entries.append((k, _fixed_to_str(scaled, scale_digits, digits)))
        sup_scaled = max(sup_scaled, abs(scaled))
    return entries, _fixed_to_str(sup_scaled, scale_digits, digits)


@dataclass(frozen=True)
class CobordismResult:
    applicable: bool
    consistent: bool
    obstructed_at: int | None
    k_max: int

    def describe(self) -> str:
        if not self.applicable:
            return "not applicable: source pq is smaller than target p'q'"
        if self.consistent:
            return f"consistent up to k={self.k_max}"
        return f"obstructed at k={self.obstructed_at}"


def cobordism_obstruction(
    frm: tuple[int, int], to: tuple[int, int], k_max: int
) -> CobordismResult:
    """Scan for a violation of N_k(p,q) >= N_k(p',q')."""
    kp_from = KnotParams(*frm)
    kp_to = KnotParams(*to)
    if kp_from.pq < kp_to.pq:
        return CobordismResult(False, False, None, k_max)
    src = nk_upto(kp_from.p, kp_from.q, k_max)
    dst = nk_upto(kp_to.p, kp_to.q, k_max)
    for k, (a, b) in enumerate(zip(src, dst)):
        if a < b:
            return CobordismResult(True, False, k, k_max)
    return CobordismResult(True, True, None, k_max)


@dataclass(frozen=True)
class BoundResult:
    hypothesis_met: bool
    bound_squared: Fraction | None
    bound: str | None  # decimal string of the square root

    def describe(self) -> str:
        if not self.hypothesis_met:
            return "hypothesis not met: no bound"
        return f"bound {self.bound} (squared: {self.bound_squared})"


def action_linking_bound(
    kp: KnotParams,
    delta: Fraction,
    volume: Fraction,
    action_of_b: Fraction | int = 1,
    digits: int = 12,
) -> BoundResult:
    """Mean action-per-linking bound sqrt(V/pq), available when the
    contact volume satisfies V < pq/(pq + Delta)^2."""
    delta = Fraction(delta)
    volume = Fraction(volume)
    if delta <= 0:
        raise ValueError("rotation offset Delta must be positive")
    if volume <= 0:
        raise ValueError("volume must be positive")
    if Fraction(action_of_b) != 1:
        raise ValueError("the binding action is normalized to 1")
    met = volume < kp.pq / (kp.pq + delta) ** 2
    if not met:
        return BoundResult(False, None, None)
    squared = volume / kp.pq
    return BoundResult(True, squared, sqrt_decimal(squared, digits))


def calabi_mean_action_bound(
    kp: KnotParams, d: Fraction, calabi: Fraction, digits: int = 12
) -> BoundResult:
    """Mean action bound sqrt(V(psi)/pq) for twist parameter d in
    (-1/pq, 0], available when V(psi) < pq*theta_0^2 with
    theta_0 = 1/pq + d."""
    d = Fraction(d)
    calabi = Fraction(calabi)
    if not (-Fraction(1, kp.pq) < d <= 0):
        raise ValueError(f"twist parameter {d} is outside (-1/{kp.pq}, 0]")
    if calabi <= 0:
        raise ValueError("the Calabi invariant must be positive here")
    theta0 = Fraction(1, kp.pq) + d
    met = calabi < kp.pq * theta0**2
    if not met:
        return BoundResult(False, None, None)
    squared = calabi / kp.pq
    return BoundResult(True, squared, sqrt_decimal(squared, digits))
