"""Noising and rectified denoising over latent video tensors."""

from ._core import (
    __version__,
    evaluate,
    generate,
    omega_ramp,
    read_latent,
    rectify,
    write_latent,
)

__all__ = [
    "__version__",
    "evaluate",
    "generate",
    "omega_ramp",
    "read_latent",
    "rectify",
    "write_latent",
]
