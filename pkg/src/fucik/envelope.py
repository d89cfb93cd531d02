"""Majorant of the coefficient defect of the two-arc profile.

For the fundamental profile with shape parameter gamma the distance of its
sine coefficients from the unperturbed pattern (1 at k = 2, 0 elsewhere)
admits simple increasing majorants bound_1(gamma), bound_2(gamma), ...  The
envelope combines them, weighted by the compression operator norms, into a
single increasing function of gamma that vanishes at 4 and crosses 1 just
below 6.5.  The infinite part of the sum collapses to a closed form built
from the cotangent value of the series sum_{k>=1} 1/(k^2 - a^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .fourier import _alpha_major, dilation_norm_bound

TAIL_WEIGHT = math.sqrt(6.0 / 5.0)

# The k = 3 majorant has a removable singularity at gamma = 9; staying a hair
# below keeps every factor representable without special-casing the limit.
GAMMA_MAX = 9.0 - 1e-9


def _check_gamma(gamma: float) -> float:
    g = float(gamma)
    if not 4.0 <= g <= GAMMA_MAX:
        raise ValueError("gamma must lie in [4, 9), capped at 9 - 1e-9")
    return g


@dataclass(frozen=True)
class EnvelopeEval:
    """Envelope value at gamma together with its five displayed summands."""

    gamma: float
    summands: tuple[float, float, float, float, float]
    value: float
    tail_method: str


def coefficient_bound(k: int, gamma: float) -> float:
    """Increasing majorant of the k-th coefficient defect.

    For k = 1 and k = 3 the majorant is the exact absolute coefficient; for
    k = 2 it majorizes the distance of the coefficient from 1; from k = 4 on
    it drops the oscillating sine factor from the closed form, leaving a
    positive rational expression.  All of them vanish at gamma = 4.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    g = _check_gamma(gamma)
    if k in (1, 3):
        return abs(_alpha_major(g, k))
    s = math.sqrt(g)
    if k == 2:
        pi_sq = math.pi * math.pi
        num = ((3.0 + pi_sq) * g + (9.0 - 2.0 * pi_sq) * s - 6.0) * (s - 2.0)
        den = 3.0 * (s - 1.0) * (s + 2.0) * (3.0 * s - 2.0)
        return num / den
    pref = (2.0 / math.pi) * g * g * (s - 2.0) / (s - 1.0)
    return pref / ((k * k - g) * ((k - 1) * s - k) * ((k + 1) * s - k))


def inverse_quadratic_sum(a: float) -> float:
    """Closed form of sum_{k>=1} 1/(k^2 - a^2) for non-integer a > 0."""
    a = float(a)
    if not a > 0.0:
        raise ValueError("a must be positive")
    r = a - round(a)
    if abs(r) <= 1e-12:
        raise ValueError("a is within 1e-12 of an integer: series pole")
    # cot(pi a) has period pi, so the reduced argument keeps full accuracy
    cot = math.cos(math.pi * r) / math.sin(math.pi * r)
    return 1.0 / (2.0 * a * a) - math.pi * cot / (2.0 * a)


def envelope_tail_series(gamma: float, terms: int) -> float:
    """Direct truncation of the weighted k >= 5 majorant sum.

    Exists as the oracle for the closed-form tail; it is never the default
    evaluation path.
    """
    g = float(gamma)
    if not 4.0 < g <= GAMMA_MAX:
        raise ValueError("the series oracle needs gamma in (4, 9)")
    if isinstance(terms, bool) or not isinstance(terms, int) or terms < 5:
        raise ValueError("need at least the terms up to k = 5")
    s = math.sqrt(g)
    k = np.arange(5.0, float(terms) + 1.0)
    body = 1.0 / ((k * k - g) * ((k - 1.0) * s - k) * ((k + 1.0) * s - k))
    # s - 2 as a quotient: the direct difference wastes all its accuracy
    # right where the sum is smallest
    pref = TAIL_WEIGHT * (2.0 / math.pi) * g * g * ((g - 4.0) / (s + 2.0)) / (s - 1.0)
    return pref * float(np.sum(body))


def _cot_series_coefficients() -> tuple[float, ...]:
    # 2 zeta(2j) for j = 1..16, each from 2000 direct terms plus an
    # Euler-Maclaurin remainder good to ~1e-18
    out = []
    for j in range(1, 17):
        p = 2 * j
        head = math.fsum(k**-p for k in range(1, 2001))
        n = 2000.0
        rem = n ** (1 - p) / (p - 1) - 0.5 * n**-p + (p / 12.0) * n ** (-p - 1)
        out.append(2.0 * (head + rem))
    return tuple(out)


_COT_COEFFS = _cot_series_coefficients()


def _h_cot(r: float) -> float:
    """1/r - pi*cot(pi*r) on |r| <= 1/2, analytic straight through r = 0."""
    if abs(r) > 0.25:
        return 1.0 / r - math.pi * math.cos(math.pi * r) / math.sin(math.pi * r)
    t = r * r
    acc = 0.0
    for c in reversed(_COT_COEFFS):
        acc = acc * t + c
    # the factor 2 is already inside the table entries
    return r * acc


def _tail_inverse_quadratic_sum(a: float, a_sq: float, m: int, r: float) -> float:
    """sum_{k>=5} 1/(k^2 - a^2) with the pole at the nearest index removed.

    Folding the k = m term into the cotangent identity cancels the 1/r
    singularity in exact arithmetic, so it must be cancelled analytically
    too: r is the caller's stable value of a - m, and the remaining pieces
    are all O(1).  Requires 1 <= m <= 4 and |r| <= 1/2.
    """
    base = 1.0 / (2.0 * a_sq) + _h_cot(r) / (2.0 * a) + 1.0 / (2.0 * a * (a + m))
    correction = math.fsum(1.0 / (k * k - a_sq) for k in range(1, 5) if k != m)
    return base - correction


def _tail_closed_form(g: float) -> float:
    """Weighted k >= 5 sum via partial fractions and the cotangent form.

    The product denominator splits over k^2 - s^2 and k^2 - b^2 with
    b = s/(s-1).  Both inverse-quadratic sums are evaluated with their
    near-integer pole stripped out: as gamma drops toward 4 both s and b
    close in on 2, and the raw cotangent form loses accuracy like
    1/(gamma - 4)^2 there.
    """
    if g == 4.0:
        return 0.0
    s = math.sqrt(g)
    q = (g - 4.0) / (s + 2.0)  # s - 2 without cancellation
    b = s / (s - 1.0)
    if s < 2.5:
        sum_s = _tail_inverse_quadratic_sum(s, g, 2, q)
    else:
        sum_s = _tail_inverse_quadratic_sum(s, g, 3, s - 3.0)
    sum_b = _tail_inverse_quadratic_sum(b, b * b, 2, -q / (s - 1.0))
    return TAIL_WEIGHT * (2.0 * s / (math.pi * (s - 1.0))) * (sum_s - sum_b)


def envelope(gamma: float, tail_terms: int | None = None) -> EnvelopeEval:
    """Envelope at gamma with the five summands recorded separately.

    The default tail is the exact closed form; passing tail_terms switches
    to the truncated series (testing hook).
    """
    g = _check_gamma(gamma)
    if tail_terms is None:
        tail = _tail_closed_form(g)
        method = "closed-form"
    else:
        tail = 0.0 if g == 4.0 else envelope_tail_series(g, tail_terms)
        method = "truncated-series"
    summands = (
        dilation_norm_bound(1) * coefficient_bound(1, g),
        dilation_norm_bound(2) * coefficient_bound(2, g),
        dilation_norm_bound(3) * coefficient_bound(3, g),
        dilation_norm_bound(4) * coefficient_bound(4, g),
        tail,
    )
    return EnvelopeEval(g, summands, math.fsum(summands), method)


def envelope_value(gamma: float) -> float:
    return envelope(gamma).value


@lru_cache(maxsize=1)
def envelope_root() -> float:
    """The shape parameter where the envelope reaches 1.

    Bisection on [6, 7]; the envelope is strictly increasing there and the
    bracket is checked before iterating.
    """
    lo, hi = 6.0, 7.0
    if not envelope_value(lo) < 1.0 < envelope_value(hi):
        raise RuntimeError("envelope bracket [6, 7] failed")
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        if envelope_value(mid) < 1.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
