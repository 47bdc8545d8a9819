"""Short-time dephasing channel of one qubit and its two-qubit extension.

Qubit states live in the eigenbasis of the qubit Hamiltonian
``-E_J/2 * sigma_x``, ordered with the higher-energy eigenstate
``(|0> - |1>)/sqrt(2)`` first. In that basis the channel at exponent G is
the two-operator mixture

    rho' = (1 + delta)/2 * R rho R^dag + (1 - delta)/2 * X rho X

with ``delta = exp(-4 G)``, ``R = diag(exp(-i E_J t / 2), exp(+i E_J t / 2))``
and ``X`` the basis swap. Entrywise:

    rho_00' = (1+delta)/2 * rho_00 + (1-delta)/2 * rho_11
    rho_01' = (1+delta)/2 * exp(-i E_J t) * rho_01 + (1-delta)/2 * rho_10

with ``rho_11'`` and ``rho_10'`` fixed by trace and Hermiticity. The phase
placement is the one produced by the exact short-time split propagator;
the brute-force cross-check lives in the oracle module.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidState

__all__ = [
    "QubitParams",
    "check_pair_state",
    "check_qubit_state",
    "cptp_check",
    "deviation",
    "evolve_pair",
    "evolve_single",
    "lambda_norm",
    "max_decoherence_analytic",
    "max_decoherence_numeric",
]

log = logging.getLogger(__name__)

HERMITICITY_TOL = 1e-10
TRACE_TOL = 1e-12
QUBIT_PSD_FLOOR = -1e-12
PAIR_PSD_FLOOR = -1e-10


@dataclass(frozen=True)
class QubitParams:
    """Tunneling energy ``E_J`` of one qubit, rad/s."""

    e_j: float

    def __post_init__(self):
        if not math.isfinite(self.e_j):
            raise ValueError("e_j must be finite")


def _check_state(rho, dim: int, psd_floor: float) -> np.ndarray:
    a = np.asarray(rho, dtype=complex)
    if a.shape != (dim, dim):
        raise InvalidState(f"expected a {dim}x{dim} matrix, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise InvalidState("state entries must be finite")
    defect = float(np.abs(a - a.conj().T).max())
    if defect > HERMITICITY_TOL:
        raise InvalidState(f"not Hermitian, defect {defect:.3e}")
    trace_gap = abs(a.trace() - 1.0)
    if trace_gap > TRACE_TOL:
        raise InvalidState(f"trace differs from one by {trace_gap:.3e}")
    lowest = float(np.linalg.eigvalsh(0.5 * (a + a.conj().T)).min())
    if lowest < psd_floor:
        raise InvalidState(f"negative eigenvalue {lowest:.3e}")
    return a


def check_qubit_state(rho) -> np.ndarray:
    """Validate a single-qubit density matrix; returns it as an ndarray."""
    return _check_state(rho, 2, QUBIT_PSD_FLOOR)


def check_pair_state(rho) -> np.ndarray:
    """Validate a two-qubit density matrix; returns it as an ndarray."""
    return _check_state(rho, 4, PAIR_PSD_FLOOR)


def _apply_single(rho: np.ndarray, e_j: float, g_value: float, t: float) -> np.ndarray:
    # Linear action on an arbitrary 2x2 matrix; no input validation, so it
    # can serve both state evolution and the process-matrix construction.
    delta = math.exp(-4.0 * g_value)
    up = 0.5 * (1.0 + delta)
    dn = 0.5 * (1.0 - delta)
    ph = cmath.exp(-1j * e_j * t)
    return np.array(
        [
            [up * rho[0, 0] + dn * rho[1, 1], up * ph * rho[0, 1] + dn * rho[1, 0]],
            [
                up * ph.conjugate() * rho[1, 0] + dn * rho[0, 1],
                up * rho[1, 1] + dn * rho[0, 0],
            ],
        ]
    )


def _kraus_ops(e_j: float, g_value: float, t: float) -> list[np.ndarray]:
    delta = math.exp(-4.0 * g_value)
    half = cmath.exp(-0.5j * e_j * t)
    rot = np.array([[half, 0.0], [0.0, half.conjugate()]])
    swap = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
    return [math.sqrt(0.5 * (1.0 + delta)) * rot, math.sqrt(0.5 * (1.0 - delta)) * swap]


def evolve_single(rho0, params: QubitParams, g_value: float, t: float) -> np.ndarray:
    """Evolve one qubit for time ``t`` at decoherence exponent ``g_value``.

    ``g_value`` must be the exponent evaluated at the same ``t`` by the
    bath module. Populations mix with weights ``(1 +- delta)/2`` and the
    coherence precesses at ``E_J`` while contracting; the output is
    Hermitized to suppress rounding drift.
    """
    a = check_qubit_state(rho0)
    if g_value < 0.0:
        raise ValueError("g_value must be nonnegative")
    if t < 0.0:
        raise ValueError("t must be nonnegative")
    out = _apply_single(a, params.e_j, g_value, t)
    return 0.5 * (out + out.conj().T)


def evolve_pair(
    rho0, p1: QubitParams, p2: QubitParams, g1: float, g2: float, t: float
) -> np.ndarray:
    """Evolve a joint two-qubit state under independent dephasing channels.

    The two single-qubit channels act as a tensor product of superoperators
    on the joint state, so entangled inputs stay entangled exactly as far
    as the factorized dynamics allows; on product inputs the result is the
    tensor product of the single-qubit outputs.
    """
    a = check_pair_state(rho0)
    if g1 < 0.0 or g2 < 0.0:
        raise ValueError("exponents must be nonnegative")
    if t < 0.0:
        raise ValueError("t must be nonnegative")
    out = np.zeros((4, 4), dtype=complex)
    for ka in _kraus_ops(p1.e_j, g1, t):
        for kb in _kraus_ops(p2.e_j, g2, t):
            k = np.kron(ka, kb)
            out += k @ a @ k.conj().T
    return 0.5 * (out + out.conj().T)


def deviation(rho_real, rho_ideal) -> np.ndarray:
    """Difference of two valid qubit states; Hermitian and traceless."""
    a = check_qubit_state(rho_real)
    b = check_qubit_state(rho_ideal)
    return a - b


def lambda_norm(sigma) -> float:
    """Norm ``sqrt(|sigma_10|^2 + |sigma_11|^2)`` of a deviation operator.

    For a traceless Hermitian 2x2 matrix this equals its largest
    eigenvalue.
    """
    a = np.asarray(sigma, dtype=complex)
    if a.shape != (2, 2):
        raise InvalidState(f"expected a 2x2 matrix, got shape {a.shape}")
    defect = float(np.abs(a - a.conj().T).max())
    if defect > HERMITICITY_TOL:
        raise InvalidState(f"deviation not Hermitian, defect {defect:.3e}")
    if abs(a.trace()) > TRACE_TOL:
        raise InvalidState(f"deviation not traceless, trace {a.trace():.3e}")
    return math.sqrt(abs(a[1, 0]) ** 2 + abs(a[1, 1]) ** 2)


def max_decoherence_analytic(g_value: float) -> float:
    """Largest deviation norm over initial states: ``(1 - exp(-4 G))/2``."""
    if g_value < 0.0:
        raise ValueError("g_value must be nonnegative")
    return 0.5 * (1.0 - math.exp(-4.0 * g_value))


def max_decoherence_numeric(
    params: QubitParams, g_value: float, t: float, grid_size: int
) -> float:
    """Brute-force maximum of the deviation norm over pure initial states.

    Scans ``grid_size**2`` Bloch angles plus both poles, comparing the
    dephased channel against the purely unitary one for each, and is
    expected to approach :func:`max_decoherence_analytic` from below as
    the grid refines.
    """
    if grid_size < 8:
        raise ValueError("grid_size must be at least 8")
    thetas = np.linspace(0.0, math.pi, grid_size + 2)[1:-1]
    phis = np.linspace(0.0, 2.0 * math.pi, grid_size, endpoint=False)
    angles = [(0.0, 0.0), (math.pi, 0.0)]
    angles += [(th, ph) for th in thetas for ph in phis]
    best = 0.0
    for theta, phi in angles:
        amp0 = math.cos(0.5 * theta)
        amp1 = math.sin(0.5 * theta) * cmath.exp(1j * phi)
        vec = np.array([amp0, amp1])
        rho0 = np.outer(vec, vec.conj())
        sigma = deviation(
            evolve_single(rho0, params, g_value, t),
            evolve_single(rho0, params, 0.0, t),
        )
        best = max(best, lambda_norm(sigma))
    return best


def cptp_check(p: QubitParams, g_value: float, t: float) -> bool:
    """Whether the channel is completely positive and trace preserving.

    Applies the map to all four matrix units, assembles the corresponding
    state representation (Choi construction), and checks positivity plus
    trace preservation. Returns False with a logged diagnostic when either
    fails. The exponent is deliberately unconstrained here so nonphysical
    variants (for example a sign-flipped exponent) can be probed.
    """
    choi = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            unit = np.zeros((2, 2), dtype=complex)
            unit[i, j] = 1.0
            image = _apply_single(unit, p.e_j, g_value, t)
            gap = abs(image.trace() - unit.trace())
            if gap > 1e-10:
                log.warning(
                    "trace not preserved on basis unit (%d,%d): defect %.3e",
                    i,
                    j,
                    gap,
                )
                return False
            choi[2 * i : 2 * i + 2, 2 * j : 2 * j + 2] = image
    defect = float(np.abs(choi - choi.conj().T).max())
    if defect > 1e-10:
        log.warning("choi matrix not Hermitian, defect %.3e", defect)
        return False
    lowest = float(np.linalg.eigvalsh(0.5 * (choi + choi.conj().T)).min())
    if lowest < -1e-10:
        log.warning("choi matrix has negative eigenvalue %.6e", lowest)
        return False
    return True
