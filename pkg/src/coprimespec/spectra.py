"""Shared spectral containers and the normalized frequency grid."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .schemes import SchemeConfig


def frequency_grid(grid_size: int) -> np.ndarray:
    """Uniform grid of ``grid_size`` angular frequencies over [0, pi]."""
    if grid_size < 2:
        raise ValueError(f"grid_size must be at least 2, got {grid_size}")
    return np.linspace(0.0, np.pi, int(grid_size))


def nearest_bin(nu: float, grid_size: int) -> int:
    """Grid index closest to the normalized frequency ``nu`` (nu=1 -> pi)."""
    return int(round(float(nu) * (int(grid_size) - 1)))


@dataclass(frozen=True, eq=False)
class SpectrumEstimate:
    """Power spectral density on a normalized frequency grid.

    ``omega_grid`` spans [0, pi] in radians per virtual-grid tick of the
    scheme that produced the estimate; ``snapshots`` is the number of
    acquisition blocks averaged; ``normalization`` is the pair-count
    constant shared with the bias window.
    """

    omega_grid: np.ndarray
    psd: np.ndarray
    snapshots: int
    normalization: float
    config: SchemeConfig | None = None

    @property
    def grid_size(self) -> int:
        return int(self.omega_grid.size)
