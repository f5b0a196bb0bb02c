"""Collective payoff optima: transfers that maximize the players' sum.

The sum of the players' payoffs is maximized exactly when the post-transfer
budget-to-valuation ratios agree, and the maximum value depends only on the
total budget and total valuation:

* combined budget >= 1:  ``(2S - 1) / (2S) * (phi1 + phi2)`` with
  ``S = x1 + x2``;
* combined budget < 1:   ``(phi1 + phi2) * S / 2``.

Because budget transfers preserve valuations and contest transfers preserve
budgets, both mechanisms (and joint transfers) reach the same ridge and the
same maximum; only the equalizing transfer amount differs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .adversary import DEFAULT_EPS, player_payoffs
from .core import GameInstance, Transfer

__all__ = [
    "CollectiveReport",
    "collective_payoff",
    "optimal_contest_transfer",
    "optimal_budget_transfer",
    "max_collective_payoff",
    "collectively_beneficial_exists",
    "collective_report",
]

# Strict-improvement tolerance, scaled by total valuation so verdicts are
# scale-invariant.
IMPROVEMENT_RTOL = 1e-10


@dataclass(frozen=True)
class CollectiveReport:
    baseline: float
    optimum: float
    optimal_budget: Transfer
    optimal_contest: Transfer
    improvable: bool

    def as_dict(self) -> dict:
        return {
            "baseline": self.baseline,
            "optimum": self.optimum,
            "optimal_budget": self.optimal_budget.as_dict(),
            "optimal_contest": self.optimal_contest.as_dict(),
            "improvable": self.improvable,
        }


def collective_payoff(
    g: GameInstance, t: Transfer = Transfer(), eps: float = DEFAULT_EPS
) -> float:
    """Sum of both players' payoffs after a transfer."""
    u1, u2 = player_payoffs(g, t, eps)
    return u1 + u2


def optimal_contest_transfer(g: GameInstance) -> Transfer:
    """The valuation transfer that equalizes budget-to-valuation ratios.

    ``nu = (x2*phi1 - x1*phi2) / (x1 + x2)``; always strictly feasible.
    """
    nu = (g.x2 * g.phi1 - g.x1 * g.phi2) / (g.x1 + g.x2)
    return Transfer(0.0, nu)


def optimal_budget_transfer(g: GameInstance) -> Transfer:
    """The budget transfer that equalizes budget-to-valuation ratios.

    ``tau = (x1*phi2 - x2*phi1) / (phi1 + phi2)``; always strictly feasible.
    """
    tau = (g.x1 * g.phi2 - g.x2 * g.phi1) / (g.phi1 + g.phi2)
    return Transfer(tau, 0.0)


def max_collective_payoff(g: GameInstance) -> float:
    """Closed-form maximum of the collective payoff over all transfers."""
    total_b = g.x1 + g.x2
    total_v = g.phi1 + g.phi2
    if total_b >= 1.0:
        return (2.0 * total_b - 1.0) / (2.0 * total_b) * total_v
    return 0.5 * total_v * total_b


def collectively_beneficial_exists(g: GameInstance, eps: float = DEFAULT_EPS) -> bool:
    """Whether any transfer strictly improves the players' combined payoff.

    False exactly when the game already sits on the equal-ratio ridge (up to
    tolerance): there the collective payoff is at its maximum.
    """
    baseline = collective_payoff(g, eps=eps)
    return max_collective_payoff(g) > baseline + IMPROVEMENT_RTOL * g.total_valuation


def collective_report(g: GameInstance, eps: float = DEFAULT_EPS) -> CollectiveReport:
    baseline = collective_payoff(g, eps=eps)
    optimum = max_collective_payoff(g)
    return CollectiveReport(
        baseline=baseline,
        optimum=optimum,
        optimal_budget=optimal_budget_transfer(g),
        optimal_contest=optimal_contest_transfer(g),
        improvable=optimum > baseline + IMPROVEMENT_RTOL * g.total_valuation,
    )
