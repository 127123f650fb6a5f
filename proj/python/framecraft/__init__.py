"""Group frames of finite groups: brackets, frame bounds and constructions."""

from ._framecraft import (
    FramecraftError,
    bracket,
    fourier,
    frame_report,
    harmonic_frame,
    irreps,
    is_tight_permutation_frame,
    parseval_generator,
    permutation_frame_generator,
    run_cli,
)

__all__ = [
    "FramecraftError",
    "bracket",
    "fourier",
    "frame_report",
    "harmonic_frame",
    "irreps",
    "is_tight_permutation_frame",
    "parseval_generator",
    "permutation_frame_generator",
    "run_cli",
]
