"""Strategy registry used by the arena and the command line."""

from __future__ import annotations

from .base import CatStrategy, HerderStrategy
from .complete import BinaryHerder, CatStrategyC
from .families import (CutwidthHerder, CycleCat, CycleHerder, PathCat, PathHerder,
                       StarHerder, WheelCat, WheelHerder)

CATS = {
    "cat_strategy_C": CatStrategyC,
    "path_cat": PathCat,
    "cycle_cat": CycleCat,
    "wheel_cat": WheelCat,
}

HERDERS = {
    "binary_herder": BinaryHerder,
    "path_herder": PathHerder,
    "cycle_herder": CycleHerder,
    "star_herder": StarHerder,
    "wheel_herder": WheelHerder,
}

# resolved by the arena rather than constructed here
SPECIAL = ("optimal", "human")


def names(side: str) -> list[str]:
    table = CATS if side == "cat" else HERDERS
    return sorted(table) + list(SPECIAL)


def get(side: str, name: str, **kwargs):
    """Build a registered strategy; ``cutwidth_herder`` takes ``ordering``."""
    if side not in ("cat", "herder"):
        raise ValueError(f"unknown side '{side}'")
    if side == "herder" and name == "cutwidth_herder":
        return CutwidthHerder(kwargs["ordering"])
    table = CATS if side == "cat" else HERDERS
    try:
        return table[name]()
    except KeyError:
        raise KeyError(f"unknown {side} strategy '{name}'; choose from {', '.join(names(side))}") from None
