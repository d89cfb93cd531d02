"""Sine-basis coefficients of the fundamental two-arc profile.

The two-arc profile with shape parameter gamma in [4, 9) has closed-form
inner products against the orthonormal sines sqrt(2/pi) sin(k x).  This
module evaluates those coefficients in cancellation-free form, provides the
independent quadrature route for any curve point, and implements the
compression operators that map the fundamental profile onto higher even
indices, together with their operator-norm constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eigenfunction import SUP_NORM, build, evaluate
from .quadrature import integrate
from .spectrum import FucikPoint

BRANCHES = ("alpha-major", "beta-major")


@dataclass(frozen=True)
class CoefficientQuery:
    """Coefficient request: shape parameter, sine index, and branch.

    The beta-major branch describes the mirrored profile (negative arc
    first); its coefficients differ from the alpha-major ones by the sign
    (-1)^k.
    """

    gamma: float
    k: int
    branch: str = "alpha-major"

    def __post_init__(self) -> None:
        object.__setattr__(self, "gamma", float(self.gamma))
        if not 4.0 <= self.gamma < 9.0:
            raise ValueError("gamma must lie in [4, 9)")
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise ValueError("k must be a positive integer")
        if self.branch not in BRANCHES:
            raise ValueError(f"branch must be one of {BRANCHES}")


def _sin_pi_ratio(k: int, s: float) -> float:
    """sin(k pi / s), computed from the argument reduced modulo pi."""
    t = k / s
    m = round(t)
    return (-1.0) ** (m % 2) * math.sin(math.pi * (t - m))


def _alpha_major(gamma: float, k: int) -> float:
    """Closed-form k-th coefficient of the alpha-major two-arc profile.

    The k = 2 and k = 3 formulas carry removable singularities at the ends
    of the shape range; both are evaluated through sin(u)/u forms whose
    small argument is produced by exact factoring, never by subtraction of
    nearly equal squares.
    """
    if gamma == 4.0:
        return 1.0 if k == 2 else 0.0
    s = math.sqrt(gamma)
    pref = (2.0 / math.pi) * gamma * gamma / (s - 1.0)
    if k == 2:
        u = (gamma - 4.0) / (s + 2.0)  # equals s - 2 without cancellation
        ratio = math.sin(math.pi * u / s) / u
        return pref * ratio / ((s + 2.0) * (3.0 * s - 2.0))
    if k == 3:
        u = (9.0 - gamma) / (3.0 + s)  # equals 3 - s without cancellation
        ratio = math.sin(math.pi * u / s) / u
        return pref * (s - 2.0) * ratio / ((3.0 + s) * (2.0 * s - 3.0) * (4.0 * s - 3.0))
    num = pref * (2.0 - s) * _sin_pi_ratio(k, s)
    den = (k * k - gamma) * ((k - 1) * s - k) * ((k + 1) * s - k)
    return num / den


def coefficient(q: CoefficientQuery) -> float:
    """Closed-form coefficient for the query.

    At gamma = 4 the profile is the plain double sine, so the value is 1
    for k = 2 and 0 otherwise; the beta-major branch multiplies the
    alpha-major value by (-1)^k.
    """
    base = _alpha_major(q.gamma, q.k)
    if q.branch == "beta-major" and q.k % 2 == 1:
        return -base
    return base


def quadrature_coefficient(p: FucikPoint, k: int, tol: float = 1e-12) -> float:
    """Independent oracle: <profile(p), sqrt(2/pi) sin(k x)> by quadrature."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    f = build(p)
    kk = float(k)

    def integrand(x):
        return evaluate(f, x) * (SUP_NORM * np.sin(kk * x))

    # split both at the profile junctions and at the zeros of sin(k x), so
    # no panel contains a full oscillation; commensurate widths otherwise
    # let the sample grid alias the sine into a constant
    zeros = np.arange(1, k) * (math.pi / kk)
    cuts = np.union1d(np.asarray(f.junctions, dtype=float), zeros)
    if cuts.size > 1:
        cuts = cuts[np.concatenate(([True], np.diff(cuts) > 1e-12))]
    return integrate(integrand, 0.0, math.pi, tol=tol, breakpoints=cuts)


def apply_dilation(k: int, g):
    """Compress g by k/2: the result is x -> g((k x / 2) folded into [0, pi)).

    The fold is the translation-periodic one, period pi.  On even sines it
    reproduces the classical identity: feeding sin(n x) with even n returns
    sin(k n x / 2) exactly, for every k >= 1.  g must vanish at 0 and pi so
    the folded function stays continuous.
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    for probe in (0.0, math.pi):
        if abs(float(g(probe))) > 1e-9:
            raise ValueError("g must vanish at 0 and pi")
    half = 0.5 * k

    def dilated(x):
        folded = np.mod(half * np.asarray(x, dtype=float), math.pi)
        return g(folded)

    return dilated


def dilation_norm_bound(k: int) -> float:
    """Operator-norm constant of the k-th compression: 1 if k is even,
    sqrt(1 + 1/k) if k is odd."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    if k % 2 == 0:
        return 1.0
    return math.sqrt(1.0 + 1.0 / k)
