"""Interval algebra of antimonotonic boolean functions."""

from ._amf import (
    AntiChain,
    count_interval,
    dedekind,
    distance,
    interval_members,
    leq,
    upsilon_count,
)

__all__ = [
    "AntiChain",
    "count_interval",
    "dedekind",
    "distance",
    "interval_members",
    "leq",
    "upsilon_count",
]
