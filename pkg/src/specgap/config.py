"""Numerical tolerances used across the package."""
from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    eig: float = 1e-12          # Jacobi off-diagonal stopping ratio
    compare: float = 1e-9       # equality of computed spectral quantities
    symmetric: float = 1e-12    # accepted asymmetry of an input matrix
    degenerate: float = 1e-10   # gap below which the Fiedler space is multi-dimensional
    infinite_tau: float = 1e-14
    bisection: float = 1e-12


def load_tolerances() -> Tolerances:
    raw = os.environ.get("SPECGAP_TOL")
    if raw:
        return Tolerances(compare=float(raw))
    return Tolerances()


TOL = load_tolerances()
