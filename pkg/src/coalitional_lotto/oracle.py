"""Brute-force grid oracles, independent of the analytic characterizations.

Every analytic claim in this package has a slow counterpart here:

* ``grid_best_response`` maximizes the adversary's two-front payoff by brute
  force over its split, using nothing but the one-vs-one payoff formula;
* ``grid_mutual_search`` scans the feasible transfer set for a point where
  both players strictly gain;
* ``grid_max_collective`` maximizes the collective payoff along a mechanism's
  feasible set by grid plus local refinement.

The test suite pins oracle outputs for a golden set of games as fixtures and
requires the closed forms to reproduce them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import batch
from .adversary import DEFAULT_EPS, AdversaryAllocation, adversary_value, player_payoffs
from .core import EPS_FEAS, GameInstance, Transfer
from .mutual import Mechanism, MutualBenefitVerdict, _golden_max, _refine_off_ridge

__all__ = [
    "GridSpec",
    "DEFAULT_GRID_1D",
    "DEFAULT_GRID_2D",
    "grid_best_response",
    "grid_mutual_search",
    "grid_max_collective",
]


@dataclass(frozen=True)
class GridSpec:
    """Grid density and relative inset from open-interval endpoints."""

    resolution: int = 4001
    margin: float = 1e-6

    def __post_init__(self) -> None:
        if self.resolution < 3:
            raise ValueError("resolution must be >= 3")
        if not (0.0 < self.margin < 0.5):
            raise ValueError("margin must be in (0, 0.5)")


DEFAULT_GRID_1D = GridSpec(4001, 1e-6)
DEFAULT_GRID_2D = GridSpec(401, 1e-6)

_NEAR_RTOL = 1e-3


def _adv_value_vec(g: GameInstance, xa1):
    """Adversary payoff over an array of splits (xa2 = 1 - xa1)."""
    xa1 = np.asarray(xa1, dtype=float)
    xa2 = 1.0 - xa1
    u1 = batch._one_v_one_vec(g.phi1, g.x1, xa1)
    u2 = batch._one_v_one_vec(g.phi2, g.x2, xa2)
    return (g.phi1 - u1) + (g.phi2 - u2)


def grid_best_response(g_bar: GameInstance, spec: GridSpec = DEFAULT_GRID_1D) -> AdversaryAllocation:
    """Argmax of the adversary objective over its budget split, by grid search.

    Golden-section refinement around the best grid point resolves interior
    optima to well below the per-game comparison tolerances.  On indifference
    plateaus any argmax is acceptable (the objective value is what matters).
    """
    xs = np.linspace(0.0, 1.0, spec.resolution)
    values = _adv_value_vec(g_bar, xs)
    k = int(np.argmax(values))

    def objective(x: float) -> float:
        return adversary_value(g_bar, x, 1.0 - x)

    lo = xs[max(k - 1, 0)]
    hi = xs[min(k + 1, len(xs) - 1)]
    x_best, v_best = _golden_max(objective, lo, hi, 80)
    if values[k] > v_best:
        x_best = float(xs[k])
    return AdversaryAllocation(x_best, 1.0 - x_best)


def _ridge_proximity(g: GameInstance, mechanism: Mechanism, v):
    """Relative gap between post-transfer budget-to-valuation ratios."""
    if mechanism is Mechanism.BUDGET:
        r1 = (g.x1 - v) / g.phi1
        r2 = (g.x2 + v) / g.phi2
    else:
        r1 = g.x1 / (g.phi1 - v)
        r2 = g.x2 / (g.phi2 + v)
    return np.abs(r1 - r2) / np.maximum(r1, r2)


def _transfer_interval(g: GameInstance, mechanism: Mechanism, margin: float):
    if mechanism is Mechanism.BUDGET:
        width = g.x1 + g.x2
        inset = max(width * margin, 10.0 * EPS_FEAS)
        return -g.x2 + inset, g.x1 - inset
    width = g.phi1 + g.phi2
    inset = max(width * margin, 10.0 * EPS_FEAS)
    return -g.phi2 + inset, g.phi1 - inset


def _min_delta_fn(g, mechanism, baseline, eps):
    if mechanism is Mechanism.BUDGET:
        def f(v: float) -> float:
            u1, u2 = player_payoffs(g, Transfer(v, 0.0), eps)
            return min(u1 - baseline[0], u2 - baseline[1])
    else:
        def f(v: float) -> float:
            u1, u2 = player_payoffs(g, Transfer(0.0, v), eps)
            return min(u1 - baseline[0], u2 - baseline[1])
    return f


def _local_maxima(score: np.ndarray, top: int) -> list[int]:
    left = np.empty_like(score)
    right = np.empty_like(score)
    left[0] = -np.inf
    left[1:] = score[:-1]
    right[-1] = -np.inf
    right[:-1] = score[1:]
    idx = np.flatnonzero((score >= left) & (score >= right))
    if idx.size == 0:
        return [int(np.argmax(score))]
    order = idx[np.argsort(score[idx])[::-1]]
    return [int(i) for i in order[:top]]


def grid_mutual_search(
    g: GameInstance, mechanism: Mechanism, spec: GridSpec | None = None
) -> MutualBenefitVerdict:
    """Exhaustive search for a strictly mutually beneficial transfer.

    1-D scan for budget/contest, 2-D for joint; grid hits are polished and
    near-misses refined by golden-section on the smaller payoff delta around
    the best few local maxima.
    """
    if spec is None:
        spec = DEFAULT_GRID_2D if mechanism is Mechanism.JOINT else DEFAULT_GRID_1D
    baseline = player_payoffs(g, eps=DEFAULT_EPS)
    gain = 1e-12 * g.total_valuation

    if mechanism is Mechanism.JOINT:
        t_lo, t_hi = _transfer_interval(g, Mechanism.BUDGET, spec.margin)
        n_lo, n_hi = _transfer_interval(g, Mechanism.CONTEST, spec.margin)
        taus = np.linspace(t_lo, t_hi, spec.resolution)[:, None]
        nus = np.linspace(n_lo, n_hi, spec.resolution)[None, :]
        u1, u2 = batch.payoffs_at_transfers(g, taus, nus)
        score = np.minimum(u1 - baseline[0], u2 - baseline[1])
        k = int(np.argmax(score))
        i, j = divmod(k, spec.resolution)
        best = float(score[i, j])
        near = gain < best < _NEAR_RTOL * g.total_valuation
        if best > gain:
            witness = Transfer(float(taus[i, 0]), float(nus[0, j]))
            return MutualBenefitVerdict(mechanism, True, witness, "oracle-grid", near)
        return MutualBenefitVerdict(mechanism, False, None, None, near)

    lo, hi = _transfer_interval(g, mechanism, spec.margin)
    vs = np.linspace(lo, hi, spec.resolution)
    if mechanism is Mechanism.BUDGET:
        u1, u2 = batch.payoffs_at_transfers(g, vs, 0.0)
    else:
        u1, u2 = batch.payoffs_at_transfers(g, 0.0, vs)
    score = np.minimum(u1 - baseline[0], u2 - baseline[1])
    f = _min_delta_fn(g, mechanism, baseline, DEFAULT_EPS)
    best_v, best = float(vs[int(np.argmax(score))]), float(np.max(score))
    for k in _local_maxima(score, top=5):
        a = vs[max(k - 1, 0)]
        b = vs[min(k + 1, len(vs) - 1)]
        v, val = _golden_max(f, a, b, 60)
        if val > best:
            best_v, best = v, val
    # The no-transfer point always has zero deltas, so a negative verdict's
    # best score is trivially near zero; only positive verdicts with a thin
    # margin (and knife-edge cases below) are flagged.
    near = gain < best < _NEAR_RTOL * g.total_valuation
    if best > gain and _ridge_proximity(g, mechanism, best_v) <= 1e-6:
        # Refinement can converge onto the single transfer that lands the
        # game on the equal-ratio ridge, where a benefit exists only under
        # the adversary's indifference tie-break.  Such knife-edge points do
        # not witness a robust opportunity: fall back to off-ridge evidence,
        # probing the two side intervals for windows opening at the ridge.
        prox = _ridge_proximity(g, mechanism, vs)
        off = (prox > 1e-6) & (score > gain)
        if np.any(off):
            k = int(np.argmax(np.where(off, score, -np.inf)))
            best_v, best = float(vs[k]), float(score[k])
        else:
            step = float(vs[1] - vs[0])
            v, val = _refine_off_ridge(
                f,
                lambda v: float(_ridge_proximity(g, mechanism, v)),
                best_v,
                step,
                float(vs[0]),
                float(vs[-1]),
                60,
            )
            if v is not None and val > gain:
                best_v, best = v, val
            else:
                return MutualBenefitVerdict(mechanism, False, None, "ridge-knife-edge", True)
    if best > gain:
        witness = Transfer(best_v, 0.0) if mechanism is Mechanism.BUDGET else Transfer(0.0, best_v)
        return MutualBenefitVerdict(mechanism, True, witness, "oracle-grid", near)
    return MutualBenefitVerdict(mechanism, False, None, None, near)


def grid_max_collective(
    g: GameInstance, mechanism: Mechanism, spec: GridSpec | None = None
) -> float:
    """Grid-plus-refinement maximum of the collective payoff along a mechanism."""
    if spec is None:
        spec = DEFAULT_GRID_2D if mechanism is Mechanism.JOINT else DEFAULT_GRID_1D

    if mechanism is Mechanism.JOINT:
        t_lo, t_hi = _transfer_interval(g, Mechanism.BUDGET, spec.margin)
        n_lo, n_hi = _transfer_interval(g, Mechanism.CONTEST, spec.margin)
        taus = np.linspace(t_lo, t_hi, spec.resolution)
        nus = np.linspace(n_lo, n_hi, spec.resolution)
        total = batch.collective_at_transfers(g, taus[:, None], nus[None, :])
        k = int(np.argmax(total))
        i, j = divmod(k, spec.resolution)
        tau, nu = float(taus[i]), float(nus[j])
        best = float(total[i, j])

        def joint_total(a: float, b: float) -> float:
            u1, u2 = player_payoffs(g, Transfer(a, b), DEFAULT_EPS)
            return u1 + u2

        # Two rounds of coordinate-wise golden refinement.
        for _ in range(2):
            a = taus[max(i - 1, 0)]
            b = taus[min(i + 1, len(taus) - 1)]
            tau, val = _golden_max(lambda v: joint_total(v, nu), a, b, 60)
            a = nus[max(j - 1, 0)]
            b = nus[min(j + 1, len(nus) - 1)]
            nu, val = _golden_max(lambda v: joint_total(tau, v), a, b, 60)
            best = max(best, val)
        return best

    lo, hi = _transfer_interval(g, mechanism, spec.margin)
    vs = np.linspace(lo, hi, spec.resolution)
    if mechanism is Mechanism.BUDGET:
        total = batch.collective_at_transfers(g, vs, 0.0)

        def f(v: float) -> float:
            u1, u2 = player_payoffs(g, Transfer(v, 0.0), DEFAULT_EPS)
            return u1 + u2
    else:
        total = batch.collective_at_transfers(g, 0.0, vs)

        def f(v: float) -> float:
            u1, u2 = player_payoffs(g, Transfer(0.0, v), DEFAULT_EPS)
            return u1 + u2

    k = int(np.argmax(total))
    a = vs[max(k - 1, 0)]
    b = vs[min(k + 1, len(vs) - 1)]
    _, refined = _golden_max(f, a, b, 80)
    return max(float(total[k]), refined)
