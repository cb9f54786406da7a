"""
Limit solution and boundary-layer corrector of the stationary Burgers problem

-ε u'' + u u' = f on (0, 1), u(0) = u(1) = -1.
"""
import logging
from typing import Callable, Tuple

import numpy as np
from numpy.typing import ArrayLike

from ..exceptions import DataConditionViolation, DegenerateCorrector


logger = logging.getLogger(__name__)

Jet = Tuple[np.ndarray, np.ndarray, np.ndarray]
Antiderivative = Callable[[np.ndarray], np.ndarray]

SCAN_POINTS = 1001
DEGENERACY_TOL = 1e-12


def _radicand(integral_from_one: Antiderivative, x: ArrayLike) -> np.ndarray:
    return 2.0 * np.asarray(integral_from_one(np.asarray(x, dtype=float))) + 1.0


def check_burgers_forcing(integral_from_one: Antiderivative) -> None:
    """
    Verify 2∫₁ˣ f + 1 > 0 on a 1001-point scan of [0, 1]

    Raises:
        DataConditionViolation: If the radicand is not positive somewhere
    """
    scan = np.linspace(0.0, 1.0, SCAN_POINTS)
    radicand = _radicand(integral_from_one, scan)
    bad = np.flatnonzero(~(radicand > 0.0))
    if bad.size:
        x_bad = scan[bad[0]]
        raise DataConditionViolation(
            f"Burgers limit solution undefined: 2∫₁ˣ f + 1 = {radicand[bad[0]]:.6g} "
            f"at x = {x_bad:.4f} (must stay positive on [0, 1])"
        )


def burgers_u0(integral_from_one: Antiderivative, x: ArrayLike) -> np.ndarray:
    """
    Inviscid limit u⁰(x) = -(2∫₁ˣ f + 1)^{1/2}, strictly negative

    Args:
        integral_from_one: Callable returning ∫₁ˣ f(s) ds
        x: Evaluation point(s) in [0, 1]

    Raises:
        DataConditionViolation: If the radicand is not positive at x
    """
    radicand = _radicand(integral_from_one, x)
    if np.any(~(radicand > 0.0)):
        raise DataConditionViolation("Burgers limit solution radicand is not positive")
    return -np.sqrt(radicand)


def _check_inputs(eps: float, u00: float) -> None:
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    if not u00 < 0:
        raise ValueError(f"u0(0) must be negative (outflow at x=0), got {u00}")


def burgers_phi_jet(eps: float, u00: float, x: ArrayLike) -> Jet:
    """
    Closed-form Burgers corrector φ and its derivatives

    φ(x) = 2u00(1+u00)e^{u00 x/ε} / (1 - u00 - (1+u00)e^{u00 x/ε}).
    Derivatives follow from the first-order corrector equation
    -ε φ' + u00 φ + φ²/2 = 0, which avoids differentiating the quotient.

    Args:
        eps: Viscosity ε > 0
        u00: Limit solution at the outflow boundary, u⁰(0) < 0
        x: Evaluation point(s)

    Returns:
        Tuple (φ, φ', φ'')
    """
    _check_inputs(eps, u00)
    x = np.asarray(x, dtype=float)
    decay = np.exp(u00 * x / eps)
    amplitude = 1.0 + u00
    phi = 2.0 * u00 * amplitude * decay / (1.0 - u00 - amplitude * decay)
    phi_x = (u00 * phi + 0.5 * phi * phi) / eps
    phi_xx = phi_x * (u00 + phi) / eps
    return phi, phi_x, phi_xx


def burgers_phi_at_zero(u00: float) -> float:
    """φ(0) = -(1 + u00), the layer amplitude"""
    return -(1.0 + u00)


def burgers_phi_tilde_jet(eps: float, u00: float, x: ArrayLike) -> Jet:
    """
    Normalized corrector φ̃ = φ/φ(0), so that φ̃(0) = 1

    Raises:
        DegenerateCorrector: If |1 + u00| <= 1e-12 (no layer to normalize)
    """
    _check_inputs(eps, u00)
    if abs(burgers_phi_at_zero(u00)) <= DEGENERACY_TOL:
        raise DegenerateCorrector(
            f"Burgers layer amplitude vanishes (u0(0) = {u00}); use the plain ansatz"
        )
    # same formula at x=0 so the normalized value there is exactly one
    phi0 = float(burgers_phi_jet(eps, u00, 0.0)[0])
    phi, phi_x, phi_xx = burgers_phi_jet(eps, u00, x)
    return phi / phi0, phi_x / phi0, phi_xx / phi0
