"""Analytic correlation dynamics for the GHZ and W families, plus solvers
for sudden-death times and the discord branch crossing.

These closed forms serve as the oracle for the numeric pipeline: every
value they report must be reproduced by state construction + channel
evolution + measure evaluation.

Note on thresholds: maximised over angles, the GHZ-family Svetlichny
expectation at t=0 is 4*sqrt(2)*r, so it exceeds the genuine-nonlocality
bound 4 exactly for r > 1/sqrt(2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ContractError
from .linalg import ZERO_EIGENVALUE
from .noise import NoiseParams, decoherence_exponent, exp_decay

SQRT2 = math.sqrt(2.0)
LN2 = math.log(2.0)

#: thresholds whose first crossing defines the death time of each measure.
DEATH_THRESHOLDS = {"N": 0.0, "C": 0.0, "D": 0.0, "mabk": 1.0, "svetlichny": 4.0}

_BRACKET_START = 50.0
_BRACKET_MAX = 400.0
_BISECT_TOL = 1e-9


@dataclass(frozen=True)
class CorrelationReport:
    """Correlation values of one family at one (r, noise, t) point.

    ``d_branch`` records which discord branch is active (1 or 2, 0 when the
    family carries no discord), making the branch-crossing kink visible.
    """

    N: float
    C: float
    D: float
    D1: float
    D2: float
    mabk: float
    svetlichny: float
    d_branch: int


def _plog2(x: float) -> float:
    return 0.0 if x <= ZERO_EIGENVALUE else x * math.log2(x)


def ghz_closed_form(noise: NoiseParams, r: float, t: float, theta_bc: float) -> CorrelationReport:
    """Analytic measures for the evolved GHZ-type state.

    The state keeps no bipartite correlations, so C and D are identically
    zero; tripartite negativity and the Bell expectations decay with
    exp(-3 f(t)).
    """
    _check_r(r)
    e3 = exp_decay(3.0 * decoherence_exponent(noise, t))
    n_val = max(0.0, -(1.0 - r - 4.0 * r * e3) / 8.0)
    mabk = 2.0 * r * e3 * abs(math.cos(theta_bc))
    svet = 4.0 * r * e3 * abs(math.cos(theta_bc) - math.sin(theta_bc))
    return CorrelationReport(N=n_val, C=0.0, D=0.0, D1=0.0, D2=0.0,
                             mabk=mabk, svetlichny=svet, d_branch=0)


def _w_discord_branches(r: float, e2: float) -> tuple[float, float]:
    """Discord branches of the W family as functions of r and exp(-2f).

    Branch 1 reduces exactly to a two-eigenvalue entropy excess
    (b+-delta around the stationary population b), evaluated through
    log1p so it stays positive and monotone down to delta ~ 1e-150.
    """
    a = (1.0 - r) / 4.0
    b = (3.0 + r) / 12.0
    delta = (r / 3.0) * e2

    x = delta / b
    if x <= 0.5:
        d1 = (b * math.log1p(-x * x)
              + delta * (math.log1p(x) - math.log1p(-x))) / LN2
    else:
        d1 = _plog2(b - delta) + _plog2(b + delta) - 2.0 * _plog2(b)

    s_a = -(_plog2((3.0 - r) / 6.0) + _plog2((3.0 + r) / 6.0))
    s_ab = -(_plog2(a) + _plog2(b) + _plog2(b - delta) + _plog2(b + delta))
    kappa = (r / 3.0) * math.sqrt(1.0 + 4.0 * e2 * e2)
    h_kappa = -(_plog2((1.0 + kappa) / 2.0) + _plog2((1.0 - kappa) / 2.0))
    d2 = s_a - s_ab + h_kappa
    return d1, d2


def w_closed_form(noise: NoiseParams, r: float, t: float, theta_bc: float) -> CorrelationReport:
    """Analytic measures for the evolved W-type state.

    Entanglement and Bell expectations decay with exp(-2 f(t)); the discord
    is the minimum of two branches whose crossing produces a kink in time.
    """
    _check_r(r)
    e2 = exp_decay(2.0 * decoherence_exponent(noise, t))
    n_val = max(0.0, (-3.0 + 3.0 * r + 8.0 * SQRT2 * r * e2) / 24.0)
    c_val = max(0.0, (4.0 * r * e2 - math.sqrt(3.0 * (1.0 - r) * (3.0 + r))) / 6.0)
    d1, d2 = _w_discord_branches(r, e2)
    mabk = (r / 2.0) * (1.0 + 2.0 * e2) * abs(math.sin(theta_bc))
    svet = r * (1.0 + 2.0 * e2) * abs(math.cos(theta_bc) + math.sin(theta_bc))
    return CorrelationReport(N=n_val, C=c_val, D=min(d1, d2), D1=d1, D2=d2,
                             mabk=mabk, svetlichny=svet,
                             d_branch=1 if d1 <= d2 else 2)


def closed_form(family: str, noise: NoiseParams, r: float, t: float,
                theta_bc: float) -> CorrelationReport:
    """Dispatch to the GHZ or W closed form."""
    if family == "GHZ":
        return ghz_closed_form(noise, r, t, theta_bc)
    if family == "W":
        return w_closed_form(noise, r, t, theta_bc)
    raise ContractError(f"unknown family {family!r}")


def _check_r(r: float):
    if not 0.0 <= r <= 1.0:
        raise ContractError(f"purity must lie in [0, 1], got {r}")


# ---------------------------------------------------------------------------
# margins and solvers

def death_margin(family: str, measure: str, noise: NoiseParams, r: float, t: float) -> float:
    """Signed distance of the closed-form value from its death threshold.

    Positive while the correlation is alive; its first root is the sudden
    death time.  The max{0, .} in N and C is deliberately omitted so the
    margin crosses zero smoothly.
    """
    _check_r(r)
    f = decoherence_exponent(noise, t)
    if family == "GHZ":
        e3 = exp_decay(3.0 * f)
        if measure == "N":
            return -(1.0 - r - 4.0 * r * e3) / 8.0
        if measure == "mabk":
            return 2.0 * r * e3 - 1.0
        if measure == "svetlichny":
            return 4.0 * SQRT2 * r * e3 - 4.0
        if measure in ("C", "D"):
            return -1.0  # identically zero correlations: born dead
    elif family == "W":
        e2 = exp_decay(2.0 * f)
        if measure == "N":
            return (-3.0 + 3.0 * r + 8.0 * SQRT2 * r * e2) / 24.0
        if measure == "C":
            return (4.0 * r * e2 - math.sqrt(3.0 * (1.0 - r) * (3.0 + r))) / 6.0
        if measure == "mabk":
            return (r / 2.0) * (1.0 + 2.0 * e2) - 1.0
        if measure == "svetlichny":
            return SQRT2 * r * (1.0 + 2.0 * e2) - 4.0
        if measure == "D":
            d = min(_w_discord_branches(r, e2))
            if d == 0.0 and r > ZERO_EIGENVALUE and e2 > 0.0:
                # branch 1 scales like exp(-4f) and underflows to 0.0 long
                # before the exact value does; keep the sign information so
                # the solver does not mistake underflow for a crossing
                return 5e-324
            return d
    raise ContractError(f"unknown family/measure {family!r}/{measure!r}")


def first_crossing(margin, gamma_rate: float = 1.0, tol: float = _BISECT_TOL):
    """Smallest t > 0 where ``margin(t)`` first drops through zero.

    Brackets on [0, 50/Gamma], doubling the window up to 400/Gamma, then
    bisects to |dt| <= tol/Gamma.  Returns None when the margin starts
    non-positive (already dead) or never crosses (asymptotic decay).
    """
    if margin(0.0) <= 0.0:
        return None
    hi = _BRACKET_START / gamma_rate
    while margin(hi) > 0.0:
        hi *= 2.0
        if hi > _BRACKET_MAX / gamma_rate:
            return None
    lo = 0.0
    while hi - lo > tol / gamma_rate:
        mid = 0.5 * (lo + hi)
        if margin(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def death_time(family: str, measure: str, noise: NoiseParams, r: float):
    """Sudden-death time of a closed-form correlation measure, or None.

    Angles are the t=0 optima, so the Bell margins use |cos|=1 (GHZ MABK),
    sqrt(2) (Svetlichny) and |sin|=1 (W MABK) prefactors.
    """
    return first_crossing(
        lambda t: death_margin(family, measure, noise, r, t),
        gamma_rate=noise.gamma_rate,
    )


def discord_kink_time(noise: NoiseParams, r: float, scan_window: float = 20.0,
                      scan_points: int = 2001):
    """Smallest t > 0 where the two W-family discord branches cross.

    Scans [0, scan_window/Gamma] for a sign change of D1 - D2 and bisects
    it to 1e-9/Gamma.  Returns None when no crossing exists (e.g. r -> 0,
    where both branches vanish identically).
    """
    _check_r(r)
    if r <= ZERO_EIGENVALUE:
        return None

    def gap(t: float) -> float:
        d1, d2 = _w_discord_branches(r, exp_decay(2.0 * decoherence_exponent(noise, t)))
        return d1 - d2

    ts = [scan_window / noise.gamma_rate * i / (scan_points - 1) for i in range(scan_points)]
    vals = [gap(t) for t in ts]
    for i in range(scan_points - 1):
        if vals[i] == 0.0:
            continue
        if vals[i] * vals[i + 1] < 0.0:
            lo, hi = ts[i], ts[i + 1]
            ref = vals[i]
            while hi - lo > _BISECT_TOL / noise.gamma_rate:
                mid = 0.5 * (lo + hi)
                if ref * gap(mid) > 0.0:
                    lo = mid
                else:
                    hi = mid
            return 0.5 * (lo + hi)
    return None
