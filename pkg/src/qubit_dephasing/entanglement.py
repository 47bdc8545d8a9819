"""Wootters concurrence and analytic references for a dephasing pair."""

from __future__ import annotations

import cmath
import math

import numpy as np

from .errors import InvalidState
from .channel import check_pair_state
from .qmath import general_eigenvalues

__all__ = [
    "analytic_bell_concurrence",
    "analytic_bell_state",
    "concurrence",
    "initial_state",
    "spin_flip",
]

_SIGMA_Y = np.array([[0.0, -1j], [1j, 0.0]])
_FLIP = np.kron(_SIGMA_Y, _SIGMA_Y)

# Relative floor for zeroing rounding noise on the eigenvalues of a
# positive-semidefinite state before its square root is formed.
PSD_SQRT_FLOOR = 1e-14


def _psd_sqrt(a: np.ndarray) -> np.ndarray:
    # Square root of a PSD matrix; eigenvalues inside the rounding band
    # around zero are treated as exact zeros so the root stays clean.
    w, v = np.linalg.eigh(a)
    w = np.where(w < PSD_SQRT_FLOOR * max(1.0, float(w.max())), 0.0, w)
    return (v * np.sqrt(w)) @ v.conj().T


def initial_state(alpha: complex) -> np.ndarray:
    """Projector onto ``(|01> + alpha |10>) / sqrt(1 + |alpha|^2)``.

    The concurrence of the returned state is ``2|alpha| / (1 + |alpha|^2)``,
    which peaks at one for ``|alpha| = 1`` and vanishes for ``alpha = 0``.
    """
    a = complex(alpha)
    if not (math.isfinite(a.real) and math.isfinite(a.imag)):
        raise ValueError("alpha must be finite")
    vec = np.zeros(4, dtype=complex)
    vec[1] = 1.0
    vec[2] = a
    vec /= math.sqrt(1.0 + abs(a) ** 2)
    return np.outer(vec, vec.conj())


def spin_flip(rho) -> np.ndarray:
    """Spin-flipped companion ``(sy x sy) conj(rho) (sy x sy)`` of a state.

    Conjugation by a unitary of the complex conjugate preserves
    Hermiticity, trace, and positivity; applying the flip twice returns
    the original state.
    """
    a = check_pair_state(rho)
    return _FLIP @ a.conj() @ _FLIP


def concurrence(rho) -> float:
    """Wootters concurrence of a two-qubit state, in ``[0, 1]``.

    The eigenvalues ``mu_i`` of ``rho * spin_flip(rho)`` are the squares
    of the Wootters ``lambda_i``; for a valid state they are real and
    nonnegative up to rounding, and anything beyond the rounding band
    (``|Im| > 1e-8`` or ``Re < -1e-10``) raises ``InvalidState``. The
    value itself comes from the singular values of
    ``sqrt(rho) sqrt(rho_tilde)``, which equal the ``lambda_i`` but stay
    accurate near zero: square-rooting a vanishing ``mu_i`` would inflate
    its rounding noise from 1e-16 to 1e-8, swamping the small
    coherence-suppression gaps this library is about.
    """
    a = check_pair_state(rho)
    rho_tilde = _FLIP @ a.conj() @ _FLIP
    mus = general_eigenvalues(a @ rho_tilde)
    worst_imag = float(np.abs(mus.imag).max())
    if worst_imag > 1e-8:
        raise InvalidState(
            f"eigenvalues of rho * rho_tilde not real: max |imag| {worst_imag:.3e}"
        )
    if float(mus.real.min()) < -1e-10:
        raise InvalidState(
            f"eigenvalue of rho * rho_tilde too negative: {float(mus.real.min()):.3e}"
        )
    lams = np.linalg.svd(_psd_sqrt(a) @ _psd_sqrt(rho_tilde), compute_uv=False)
    value = float(lams[0] - lams[1] - lams[2] - lams[3])
    return min(1.0, max(0.0, value))


def analytic_bell_state(g1: float, g2: float, e_j_sum: float, t: float) -> np.ndarray:
    """Closed-form state of a maximally entangled pair after time ``t``.

    With ``x = exp(-4 g1 - 4 g2)``, the corners carry weight
    ``A = (1 - x)/4`` and the two-qubit precession phase
    ``exp(-i t e_j_sum / 2)`` (``e_j_sum`` is the sum of both tunneling
    energies), while the inner block carries ``B = (1 + x)/4``. Matches
    ``evolve_pair`` on the ``alpha = 1`` input when both qubits share one
    tunneling energy.
    """
    if g1 < 0.0 or g2 < 0.0:
        raise ValueError("exponents must be nonnegative")
    x = math.exp(-4.0 * (g1 + g2))
    corner = 1.0 - x
    inner = 1.0 + x
    phase = cmath.exp(-0.5j * e_j_sum * t)
    m = np.zeros((4, 4), dtype=complex)
    m[0, 0] = m[3, 3] = corner
    m[1, 1] = m[2, 2] = m[1, 2] = m[2, 1] = inner
    m[0, 3] = corner * phase
    m[3, 0] = corner * phase.conjugate()
    return 0.25 * m


def analytic_bell_concurrence(g1: float, g2: float) -> float:
    """Concurrence ``exp(-4 g1 - 4 g2)`` of the evolved maximally entangled pair.

    Equals the product of the two single-qubit suppression factors, which
    is the headline factorization this library reproduces.
    """
    if g1 < 0.0 or g2 < 0.0:
        raise ValueError("exponents must be nonnegative")
    return math.exp(-4.0 * (g1 + g2))
