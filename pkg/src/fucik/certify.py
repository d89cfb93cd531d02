"""Certification engine for profile systems.

A system assigns to every index n either the unperturbed sine (the implicit
identity tail) or a curve point whose profile replaces it.  The engine sums,
over indices kept outside the envelope set, the squared projection defect of
each profile against its own sine mode, adds the squared envelope of the
largest even dilation parameter inside the set, and certifies the basis
property when the total stays below 1.  Passing is a proof; failing is not a
disproof, because the criterion is sufficient only.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .eigenfunction import SUP_NORM, build, evaluate
from .envelope import envelope_root, envelope_value
from .quadrature import integrate
from .spectrum import (
    FucikPoint,
    SpectrumError,
    dilation_parameter,
    is_diagonal,
    solve_alpha,
    solve_beta,
    validate_point,
)

MODES = ("exact", "bound")
SPLIT_DEFAULT = "default"
SPLIT_AUTO = "auto"

_NOTE = (
    "a pass certifies the basis property; a fail only means this sufficient "
    "criterion did not apply at the attempted split"
)


class InputError(ValueError):
    """Malformed system description."""


def defect_details(p: FucikPoint, tol: float = 1e-12) -> dict:
    """Quadrature ingredients of the projection defect of one profile.

    Returns the squared norm, the inner product with the unit sine mode,
    the squared distance to the mode, and the defect computed both directly
    and through the distance identity.  The two defect routes are
    algebraically equal; comparing them bounds the quadrature error.
    """
    f = build(p)
    nn = float(p.n)

    def mode(x):
        return SUP_NORM * np.sin(nn * x)

    def f_sq(x):
        return evaluate(f, x) ** 2

    def f_mode(x):
        return evaluate(f, x) * mode(x)

    def diff_sq(x):
        d = evaluate(f, x) - mode(x)
        return d * d

    brk = f.junctions
    norm_sq = integrate(f_sq, 0.0, math.pi, tol=tol, breakpoints=brk)
    inner = integrate(f_mode, 0.0, math.pi, tol=tol, breakpoints=brk)
    distance_sq = integrate(diff_sq, 0.0, math.pi, tol=tol, breakpoints=brk)
    defect = 1.0 - inner * inner / norm_sq
    defect_alt = distance_sq - (norm_sq - inner) ** 2 / norm_sq
    return {
        "norm_sq": norm_sq,
        "inner": inner,
        "distance_sq": distance_sq,
        "defect": defect,
        "defect_alt": defect_alt,
    }


def projection_defect(p: FucikPoint) -> float:
    """1 - <f, mode>^2 / |f|^2 for the profile of p, by quadrature.

    Exactly zero at index 1 and at symmetric points, where the profile is
    the mode itself.  The two equivalent quadrature routes are compared and
    a mismatch beyond 1e-11 raises, as that would mean the integrals are
    not trustworthy.
    """
    validate_point(p)
    if p.n == 1 or is_diagonal(p):
        return 0.0
    d = defect_details(p)
    if abs(d["defect"] - d["defect_alt"]) > 1e-11:
        raise ArithmeticError(
            "defect identity violated beyond quadrature accuracy at "
            f"n={p.n}, alpha={p.alpha!r}"
        )
    return d["defect"]


def projection_defect_bound(p: FucikPoint) -> float:
    """Closed-form majorant of the squared distance of the profile to its mode.

    Three cases: even index; odd index on the alpha side of the symmetric
    point; odd index on the beta side.  On an odd curve exactly one side
    applies since alpha > n^2 forces beta < n^2 and conversely.
    """
    validate_point(p)
    n = p.n
    if n == 1 or is_diagonal(p):
        return 0.0
    sa = math.sqrt(p.alpha)
    sb = math.sqrt(p.beta)
    if n % 2 == 0:
        const = 8.0 * (3.0 + math.pi * math.pi) / 9.0
        dev = max(sa, sb) - n
    elif sa >= n:
        const = 8.0 * n * n * (n * n + 1.0) / (n - 1.0) ** 4
        dev = sa - n
    else:
        const = 10.0 * n * n * (n * n + 1.0) / (n + 1.0) ** 4
        dev = sb - n
    return const * (dev / n) ** 2


def optimal_scaling(p: FucikPoint) -> float:
    """<f, mode> / |f|^2: the factor that moves the profile closest to its mode."""
    validate_point(p)
    if p.n == 1 or is_diagonal(p):
        return 1.0
    d = defect_details(p)
    return d["inner"] / d["norm_sq"]


@dataclass(frozen=True)
class SystemSpec:
    """Finite description of a profile system.

    entries holds the explicitly perturbed indices (sorted, unique); every
    other index follows the identity tail rule and contributes nothing.
    split selects the even indices handled through the envelope: the literal
    "default" takes every non-symmetric even entry, "auto" greedily prunes
    that set, and an explicit tuple is taken as given.
    """

    entries: tuple[FucikPoint, ...]
    split: object = SPLIT_DEFAULT
    mode: str = "exact"
    tail_rule: str = "identity"

    def __post_init__(self) -> None:
        ns = [p.n for p in self.entries]
        if ns != sorted(set(ns)):
            raise InputError("entries must be sorted with unique indices")
        if self.mode not in MODES:
            raise InputError(f"mode must be one of {MODES}")
        if self.tail_rule != "identity":
            raise InputError("only the identity tail rule is supported")
        if self.split not in (SPLIT_DEFAULT, SPLIT_AUTO):
            split = tuple(sorted(self.split))
            by_n = {p.n: p for p in self.entries}
            for n in split:
                if isinstance(n, bool) or not isinstance(n, int):
                    raise InputError("split indices must be integers")
                if n % 2 == 1:
                    raise InputError("split indices must be even")
                if n not in by_n:
                    raise InputError(f"split index {n} has no entry")
            object.__setattr__(self, "split", split)

    def point(self, n: int) -> FucikPoint | None:
        for p in self.entries:
            if p.n == n:
                return p
        return None


def parse_system(obj: dict) -> SystemSpec:
    """Build a SystemSpec from plain JSON data.

    Each entry gives n and at least one coordinate; a missing coordinate is
    completed from the curve equation, and when both are present the point
    is membership-checked.
    """
    if not isinstance(obj, dict):
        raise InputError("system description must be a JSON object")
    unknown = set(obj) - {"entries", "split", "mode", "tail_rule"}
    if unknown:
        raise InputError(f"unknown keys: {sorted(unknown)}")
    raw_entries = obj.get("entries", [])
    if not isinstance(raw_entries, list):
        raise InputError("entries must be a list")

    points = []
    for item in raw_entries:
        if not isinstance(item, dict):
            raise InputError("each entry must be an object")
        extra = set(item) - {"n", "alpha", "beta"}
        if extra:
            raise InputError(f"unknown entry keys: {sorted(extra)}")
        n = item.get("n")
        if isinstance(n, bool) or not isinstance(n, int):
            raise InputError("entry field n must be an integer")
        alpha = item.get("alpha")
        beta = item.get("beta")
        for name, value in (("alpha", alpha), ("beta", beta)):
            if value is not None and (
                isinstance(value, bool) or not isinstance(value, (int, float))
            ):
                raise InputError(f"entry field {name} must be a number")
        try:
            if alpha is None and beta is None:
                if n != 1:
                    raise InputError(f"entry n={n} needs alpha or beta")
                point = FucikPoint(1, 1.0, 1.0)
            elif beta is None:
                point = FucikPoint(n, float(alpha), solve_beta(n, float(alpha)))
            elif alpha is None:
                point = FucikPoint(n, solve_alpha(n, float(beta)), float(beta))
            else:
                point = FucikPoint(n, float(alpha), float(beta))
                validate_point(point)
        except SpectrumError as exc:
            raise InputError(f"entry n={n}: {exc}") from exc
        points.append(point)

    split = obj.get("split", SPLIT_DEFAULT)
    if isinstance(split, list):
        split = tuple(split)
    elif split not in (SPLIT_DEFAULT, SPLIT_AUTO):
        raise InputError('split must be "auto" or a list of even indices')
    mode = obj.get("mode", "exact")
    tail_rule = obj.get("tail_rule", "identity")
    return SystemSpec(
        entries=tuple(sorted(points, key=lambda p: p.n)),
        split=split,
        mode=mode,
        tail_rule=tail_rule,
    )


@dataclass(frozen=True)
class Certificate:
    """Outcome of a certification run, with per-index provenance."""

    mode: str
    split: tuple[int, ...]
    defect_sum: float
    gamma_sup: float
    envelope_sq: float
    total: float
    passed: bool
    margin: float
    per_index: tuple[dict, ...]
    note: str

    def as_dict(self) -> dict:
        return {
            "mode": self.mode,
            "split": list(self.split),
            "defect_sum": self.defect_sum,
            "gamma_sup": self.gamma_sup,
            "envelope_sq": self.envelope_sq,
            "total": self.total,
            "passed": self.passed,
            "margin": self.margin,
            "per_index": [dict(rec) for rec in self.per_index],
            "note": self.note,
        }

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=indent)


def _deviating_evens(spec: SystemSpec) -> list[FucikPoint]:
    return [p for p in spec.entries if p.n % 2 == 0 and not is_diagonal(p)]


def certify_system(spec: SystemSpec) -> Certificate:
    """Evaluate the sufficient criterion for the described system.

    The total is the sum of squared projection defects over entries outside
    the envelope set plus the squared envelope at the largest dilation
    parameter inside it.  In "exact" mode the defects come from quadrature;
    in "bound" mode each defect is replaced by its closed-form majorant,
    which certifies fewer systems but needs no integration.
    """
    defect_fn = projection_defect if spec.mode == "exact" else projection_defect_bound
    cache: dict[int, float] = {}

    def defect(p: FucikPoint) -> float:
        if p.n not in cache:
            cache[p.n] = defect_fn(p)
        return cache[p.n]

    def totals(ns: frozenset):
        defect_sum = math.fsum(defect(p) for p in spec.entries if p.n not in ns)
        gamma_sup = 4.0
        for p in spec.entries:
            if p.n in ns:
                gamma_sup = max(gamma_sup, dilation_parameter(p))
        env_sq = envelope_value(gamma_sup) ** 2
        return defect_sum, gamma_sup, env_sq, defect_sum + env_sq

    if spec.split in (SPLIT_DEFAULT, SPLIT_AUTO):
        base = []
        for p in _deviating_evens(spec):
            if dilation_parameter(p) >= 9.0:
                raise InputError(
                    f"entry n={p.n} has dilation parameter >= 9; the envelope "
                    "cannot absorb it (use an explicit split to move it out)"
                )
            base.append(p.n)
        chosen = frozenset(base)
        if spec.split == SPLIT_AUTO:
            # prune greedily, largest dilation parameter first
            by_gamma = sorted(
                base,
                key=lambda n: (-dilation_parameter(spec.point(n)), n),
            )
            best = totals(chosen)[3]
            for n in by_gamma:
                trial = chosen - {n}
                trial_total = totals(trial)[3]
                if trial_total < best:
                    chosen, best = trial, trial_total
    else:
        for n in spec.split:
            if dilation_parameter(spec.point(n)) >= 9.0:
                raise InputError(
                    f"split index {n} has dilation parameter >= 9"
                )
        chosen = frozenset(spec.split)

    defect_sum, gamma_sup, envelope_sq, total = totals(chosen)
    per_index = []
    for p in spec.entries:
        if p.n in chosen:
            rec = {
                "n": p.n,
                "method": "envelope",
                "value": dilation_parameter(p),
            }
        else:
            rec = {
                "n": p.n,
                "method": "quadrature-defect" if spec.mode == "exact" else "closed-form-bound",
                "value": defect(p),
            }
        per_index.append(rec)
    return Certificate(
        mode=spec.mode,
        split=tuple(sorted(chosen)),
        defect_sum=defect_sum,
        gamma_sup=gamma_sup,
        envelope_sq=envelope_sq,
        total=total,
        passed=total < 1.0,
        margin=1.0 - total,
        per_index=tuple(per_index),
        note=_NOTE,
    )


def combined_criterion(residual_defect: float, families) -> tuple[float, bool]:
    """Abstract two-budget test: residual_defect^2 + sum of squared family sums.

    families is a list of families, each a list of (coefficient_bound,
    operator_norm) pairs; the family budget is the sum of the products.
    Returns the total and whether it is strictly below 1.
    """
    residual_defect = float(residual_defect)
    if not math.isfinite(residual_defect) or residual_defect < 0.0:
        raise InputError("residual defect must be finite and nonnegative")
    budgets = []
    for family in families:
        terms = []
        for c, t in family:
            c = float(c)
            t = float(t)
            if not (math.isfinite(c) and math.isfinite(t)) or c < 0.0 or t < 0.0:
                raise InputError("family pairs must be finite and nonnegative")
            terms.append(c * t)
        budgets.append(math.fsum(terms))
    total = residual_defect ** 2 + math.fsum(b * b for b in budgets)
    return total, total < 1.0


@lru_cache(maxsize=None)
def zeta(s: float) -> float:
    """Riemann zeta for s > 1: one million direct terms plus the
    Euler-Maclaurin tail through the third-derivative correction."""
    s = float(s)
    if not s > 1.0:
        raise ValueError("zeta(s) requires s > 1")
    n = 1_000_000
    k = np.arange(1.0, float(n) + 1.0)
    head = float(np.sum(k ** (-s)))
    nn = float(n)
    tail = (
        nn ** (1.0 - s) / (s - 1.0)
        - 0.5 * nn ** (-s)
        + s * nn ** (-s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * nn ** (-s - 3.0) / 720.0
    )
    return head + tail


def deviation_budget(epsilon: float, sup_even_gamma: float) -> float:
    """How much squared relative deviation the odd indices may spend in total.

    With the evens capped at sup_even_gamma (strictly below the envelope
    root) and the odd deviations decaying like n^(-(1+epsilon)/2), the worst
    constant of the odd defect majorants is 45 (attained at n = 3), and the
    admissible budget per unit of the zeta-type sum is what remains of 1
    after the envelope claims its square.
    """
    epsilon = float(epsilon)
    sup_even_gamma = float(sup_even_gamma)
    if not epsilon > 0.0:
        raise InputError("epsilon must be positive")
    if not 4.0 <= sup_even_gamma:
        raise InputError("sup_even_gamma must be at least 4")
    if sup_even_gamma >= envelope_root():
        raise InputError(
            "sup_even_gamma must stay strictly below the envelope root"
        )
    num = 1.0 - envelope_value(sup_even_gamma) ** 2
    den = 45.0 * ((1.0 - 2.0 ** (-(1.0 + epsilon))) * zeta(1.0 + epsilon) - 1.0)
    return num / den


def deviation_cap(n: int, epsilon: float, budget: float) -> float:
    """Largest admissible max(alpha, beta) for odd index n under the budget."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise InputError("the cap applies to odd indices n >= 3")
    epsilon = float(epsilon)
    budget = float(budget)
    if not epsilon > 0.0 or budget < 0.0:
        raise InputError("need epsilon > 0 and a nonnegative budget")
    return (n + math.sqrt(budget) * n ** ((1.0 - epsilon) / 2.0)) ** 2
