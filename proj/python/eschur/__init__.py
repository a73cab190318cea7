"""Edge Schur functions, vertex models and crystals (C++ core)."""

from ._eschur import (
    EschurError,
    crystal_component_sizes,
    edge_schur,
    factorial_schur,
    roundtrip,
    schur_expansion,
    uncrowd,
    yang_baxter,
)

__all__ = [
    "EschurError",
    "crystal_component_sizes",
    "edge_schur",
    "factorial_schur",
    "roundtrip",
    "schur_expansion",
    "uncrowd",
    "yang_baxter",
]
