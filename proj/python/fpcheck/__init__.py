"""Proof certificate checking for model-checking claims."""

from ._fpcheck import (
    RunOutcome,
    check,
    fig1_graph,
    fig3_lts,
    fig4_lts,
    selftest,
    witness,
)

__all__ = [
    "RunOutcome",
    "check",
    "fig1_graph",
    "fig3_lts",
    "fig4_lts",
    "selftest",
    "witness",
]
