"""Core domain types and the one-vs-one General Lotto equilibrium payoff.

A game instance bundles the two players' cumulative contest valuations
(``phi1``, ``phi2``) and budgets (``x1``, ``x2``).  The common adversary's
budget is normalized to 1, so player budgets are expressed in units of the
adversary budget.  All downstream analysis (best response, transfer
benefits, collective optima) reduces to the closed-form equilibrium payoff
of a single General Lotto game, implemented here as ``one_v_one_payoff``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "GameValidationError",
    "InfeasibleTransferError",
    "GameInstance",
    "Transfer",
    "PayoffPair",
    "EPS_FEAS",
    "one_v_one_payoff",
    "post_transfer",
    "swap_indices",
]

# Transfers that would numerically zero out a budget or valuation are
# rejected; feasibility intervals are open.
EPS_FEAS = 1e-12


class GameValidationError(ValueError):
    """Game parameters are outside the valid domain (positive finite reals)."""


class InfeasibleTransferError(ValueError):
    """A transfer would push a budget or valuation to zero or below."""


def _require_positive(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise GameValidationError(f"{name} must be a positive finite real, got {value!r}")
    return value


def _require_nonnegative(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value) or value < 0.0:
        raise GameValidationError(f"{name} must be a nonnegative finite real, got {value!r}")
    return value


@dataclass(frozen=True)
class GameInstance:
    """A two-front game: valuations ``phi1``, ``phi2`` and budgets ``x1``, ``x2``.

    The adversary budget is implicitly 1.  All four parameters must be
    strictly positive.
    """

    phi1: float
    phi2: float
    x1: float
    x2: float

    def __post_init__(self) -> None:
        for name in ("phi1", "phi2", "x1", "x2"):
            object.__setattr__(self, name, _require_positive(name, getattr(self, name)))

    @property
    def total_valuation(self) -> float:
        return self.phi1 + self.phi2

    @property
    def total_budget(self) -> float:
        return self.x1 + self.x2

    def as_dict(self) -> dict:
        return {"phi1": self.phi1, "phi2": self.phi2, "x1": self.x1, "x2": self.x2}

    @classmethod
    def from_dict(cls, data: dict) -> "GameInstance":
        try:
            return cls(data["phi1"], data["phi2"], data["x1"], data["x2"])
        except KeyError as exc:
            raise GameValidationError(f"missing game field {exc}") from exc


@dataclass(frozen=True)
class Transfer:
    """A transfer from player 1 to player 2: budget ``tau``, valuation ``nu``.

    Negative components move resources in the opposite direction.  Feasibility
    is relative to a game instance: ``-x2 < tau < x1`` and ``-phi2 < nu < phi1``
    (open intervals, checked with slack ``EPS_FEAS``).
    """

    tau: float = 0.0
    nu: float = 0.0

    def __post_init__(self) -> None:
        for name in ("tau", "nu"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise GameValidationError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def as_dict(self) -> dict:
        return {"tau": self.tau, "nu": self.nu}


NO_TRANSFER = Transfer(0.0, 0.0)


@dataclass(frozen=True)
class PayoffPair:
    """Equilibrium payoffs of one General Lotto game: player and adversary.

    The two components always sum to the contest valuation of that game.
    """

    u_player: float
    u_adversary: float


def one_v_one_payoff(phi: float, x_player: float, x_adv: float) -> PayoffPair:
    """Equilibrium payoff of a single General Lotto game.

    The player keeps ``phi * x_player / (2 * x_adv)`` of the valuation when
    outgunned (``x_player <= x_adv``) and ``phi * (1 - x_adv / (2 * x_player))``
    otherwise; the adversary gets the rest.  Zero-budget limits: a player with
    no budget facing a positive adversary budget gets 0; an unopposed player
    wins everything; if both budgets are zero the player wins all contests
    (ties go to the player).
    """
    phi = _require_positive("phi", phi)
    x_player = _require_nonnegative("x_player", x_player)
    x_adv = _require_nonnegative("x_adv", x_adv)
    if x_player <= x_adv:
        u = phi * (x_player / (2.0 * x_adv)) if x_adv > 0.0 else phi
    else:
        u = phi * (1.0 - x_adv / (2.0 * x_player))
    return PayoffPair(u, phi - u)


def transfer_feasible(g: GameInstance, t: Transfer) -> bool:
    """True when every post-transfer parameter stays strictly positive."""
    return (
        g.phi1 - t.nu > EPS_FEAS
        and g.phi2 + t.nu > EPS_FEAS
        and g.x1 - t.tau > EPS_FEAS
        and g.x2 + t.tau > EPS_FEAS
    )


def post_transfer(g: GameInstance, t: Transfer) -> GameInstance:
    """Apply a transfer: ``(phi1 - nu, phi2 + nu, x1 - tau, x2 + tau)``.

    Raises ``InfeasibleTransferError`` when a component would be driven to
    zero or below.  Total valuation and total player budget are preserved.
    """
    if not transfer_feasible(g, t):
        raise InfeasibleTransferError(
            f"transfer (tau={t.tau}, nu={t.nu}) infeasible for game {g.as_dict()}"
        )
    return GameInstance(g.phi1 - t.nu, g.phi2 + t.nu, g.x1 - t.tau, g.x2 + t.tau)


def swap_indices(g: GameInstance) -> GameInstance:
    """Relabel the players: ``(phi2, phi1, x2, x1)``.  Involutive."""
    return GameInstance(g.phi2, g.phi1, g.x2, g.x1)
