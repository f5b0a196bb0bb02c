"""Vectorized payoff evaluation over arrays of transfers.

Grid oracles and parameter sweeps evaluate the two players' payoffs at many
transfers against a fixed game.  This module mirrors the scalar pipeline in
``adversary`` (classification, closed-form split, equilibrium payoff) with
numpy array operations so that a few-thousand-point scan costs a fraction of
a millisecond.  The branching logic must stay in lockstep with the scalar
code; ``tests/test_batch.py`` enforces agreement on random inputs.
"""

from __future__ import annotations

import numpy as np

from .adversary import DEFAULT_EPS
from .core import GameInstance

__all__ = ["payoffs_at_transfers", "collective_at_transfers"]


def _one_v_one_vec(phi, x_player, x_adv):
    # Branch values are computed unconditionally with guarded denominators,
    # then selected; identical conventions to core.one_v_one_payoff.
    safe_adv = np.where(x_adv > 0.0, x_adv, 1.0)
    outgunned = np.where(x_adv > 0.0, phi * x_player / (2.0 * safe_adv), phi)
    safe_pl = np.where(x_player > 0.0, x_player, 1.0)
    dominant = phi * (1.0 - x_adv / (2.0 * safe_pl))
    return np.where(x_player <= x_adv, outgunned, dominant)


def payoffs_at_transfers(g: GameInstance, taus, nus, eps: float = DEFAULT_EPS):
    """Player payoffs ``(u1, u2)`` for broadcastable arrays of transfers.

    The caller must keep transfers strictly feasible (insets from the open
    interval endpoints); no validation is performed here.
    """
    taus = np.asarray(taus, dtype=float)
    nus = np.asarray(nus, dtype=float)
    p1 = g.phi1 - nus
    p2 = g.phi2 + nus
    b1 = g.x1 - taus
    b2 = g.x2 + taus
    p1, p2, b1, b2 = np.broadcast_arrays(p1, p2, b1, b2)

    r1 = b1 / p1
    r2 = b2 / p2
    equal = np.abs(r1 - r2) <= eps * np.maximum(r1, r2)
    swap = ~equal & (r1 > r2)

    # Oriented views: index w = weaker ratio, s = stronger.
    pw = np.where(swap, p2, p1)
    ps = np.where(swap, p1, p2)
    bw = np.where(swap, b2, b1)
    bs = np.where(swap, b1, b2)

    s = np.sqrt(bw * bs * pw / ps)
    total_b = bw + bs
    case1 = ~equal & (s >= 1.0 - eps * np.maximum(1.0, s))
    case2 = ~equal & ~case1 & (1.0 - s <= bs * (1.0 + eps))
    ridge4 = equal & (total_b >= 1.0)
    # Remaining cells: case 3 proper, or the equal-ratio ridge with
    # total budget < 1 (where the case-3 formula is exact).
    sq_w = np.sqrt(bw * pw)
    sq_s = np.sqrt(bs * ps)
    xa_w = sq_w / (sq_w + sq_s)
    xa_w = np.where(ridge4, bw / total_b, xa_w)
    xa_w = np.where(case2, s, xa_w)
    xa_w = np.where(case1, 1.0, xa_w)

    uw = _one_v_one_vec(pw, bw, xa_w)
    us = _one_v_one_vec(ps, bs, 1.0 - xa_w)
    u1 = np.where(swap, us, uw)
    u2 = np.where(swap, uw, us)
    return u1, u2


def collective_at_transfers(g: GameInstance, taus, nus, eps: float = DEFAULT_EPS):
    """Sum of both players' payoffs over arrays of transfers."""
    u1, u2 = payoffs_at_transfers(g, taus, nus, eps)
    return u1 + u2
