import json
from pathlib import Path

import pytest

from coalitional_lotto.core import GameInstance
from coalitional_lotto.rng import SplitMix64

DATA_DIR = Path(__file__).parent / "data"

# The running example: player 1 rich in contests but budget-poor, player 2
# the reverse.  Sits in every transfer-benefit set at once.
DIAMOND = GameInstance(12.0, 10.0, 0.4, 1.6)


@pytest.fixture
def diamond() -> GameInstance:
    return DIAMOND


@pytest.fixture(scope="session")
def golden_oracle() -> dict:
    return json.loads((DATA_DIR / "golden_oracle.json").read_text())


def random_games(count: int, seed: int, lo: float = 0.05, hi: float = 3.0):
    rng = SplitMix64(seed)
    return [
        GameInstance(*(rng.uniform(lo, hi) for _ in range(4))) for _ in range(count)
    ]
