from typing import Tuple

import numpy as np


def projective_fit(a: np.ndarray, b: np.ndarray) -> Tuple[complex, float]:
    """Least-squares scalar ρ with a ≈ ρ b, and the residual max|a − ρ b| / max|b|.

    Empty inputs give ρ = 1 and residual 0.
    """
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    if not b.size:
        return 1 + 0j, 0.0
    scale = float(np.abs(b).max())
    if scale == 0:
        return 1 + 0j, float(np.abs(a).max())
    rho = complex(np.vdot(b, a) / np.vdot(b, b))
    return rho, float(np.abs(a - rho * b).max() / scale)


def modular_relation(s: np.ndarray, twists: np.ndarray) -> Tuple[complex, float]:
    """Fit (S T⁻¹)³ = ρ S² with T = diag(twists)."""
    if not s.size:
        return 1 + 0j, 0.0
    st = s / np.asarray(twists)[np.newaxis, :]
    return projective_fit(np.linalg.matrix_power(st, 3), s @ s)
