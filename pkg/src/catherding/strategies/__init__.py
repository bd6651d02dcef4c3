"""Deterministic herder and cat strategies."""

from .base import CatStrategy, HerderStrategy, Restriction, Strategy, StrategyError
from .complete import BinaryHerder, CatStrategyC
from .families import (CutwidthHerder, CycleCat, CycleHerder, PathCat, PathHerder,
                       StarHerder, WheelCat, WheelHerder)
from .registry import get


def binary_herder() -> BinaryHerder:
    return BinaryHerder()


def cat_strategy_C() -> CatStrategyC:
    return CatStrategyC()


def path_cat() -> PathCat:
    return PathCat()


def path_herder() -> PathHerder:
    return PathHerder()


def cycle_cat() -> CycleCat:
    return CycleCat()


def cycle_herder() -> CycleHerder:
    return CycleHerder()


def star_herder() -> StarHerder:
    return StarHerder()


def wheel_herder() -> WheelHerder:
    return WheelHerder()


def wheel_cat() -> WheelCat:
    return WheelCat()


def cutwidth_herder(ordering) -> CutwidthHerder:
    return CutwidthHerder(ordering)
