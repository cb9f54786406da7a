"""
Trial solutions built from the network output

Every ansatz is affine in V = (û, û_x, û_xx, û(0), û(1)), so each builder
only assembles the coefficient basis; values follow by contraction.
"""
from typing import Sequence

import numpy as np
from numpy.typing import ArrayLike

from ..correctors import burgers_phi_tilde_jet, exp_layer_jet, sqrt_layer_jet
from ..correctors.burgers import Jet
from ..network import NetJet, NetParams, eval_jet
from .base import AnsatzJet


BOUNDARY_POINTS = np.array([0.0, 1.0])


def boundary_jet(p: NetParams) -> NetJet:
    """Network evaluated once at x = 0 and x = 1"""
    return eval_jet(p, BOUNDARY_POINTS)


def bubble_factor(x: ArrayLike) -> Jet:
    """x(x-1), vanishing at both ends"""
    x = np.asarray(x, dtype=float)
    return x * (x - 1.0), 2.0 * x - 1.0, np.full_like(x, 2.0)


def inflow_factor(x: ArrayLike) -> Jet:
    """x, vanishing at the inflow end only"""
    x = np.asarray(x, dtype=float)
    return x, np.ones_like(x), np.zeros_like(x)


def coordinates(net: NetJet, boundary: NetJet) -> np.ndarray:
    """Stack V with the boundary values broadcast over the points"""
    shape = np.shape(net.u)
    return np.stack([
        np.asarray(net.u, dtype=float),
        np.asarray(net.ux, dtype=float),
        np.asarray(net.uxx, dtype=float),
        np.broadcast_to(boundary.u[0], shape),
        np.broadcast_to(boundary.u[1], shape),
    ])


def _basis(rows: Sequence[Sequence], shape) -> np.ndarray:
    return np.stack([
        np.stack([np.broadcast_to(np.asarray(entry, dtype=float), shape) for entry in row])
        for row in rows
    ])


def plain_ansatz(net: NetJet, boundary: NetJet, factor: Jet, lift: float = 0.0) -> AnsatzJet:
    """
    ū = q(x)·û(x) + lift, with q a polynomial vanishing where data is imposed
    """
    q, qx, qxx = factor
    shape = np.shape(net.u)
    basis = _basis(
        [
            [q, 0.0, 0.0, 0.0, 0.0],
            [qx, q, 0.0, 0.0, 0.0],
            [qxx, 2.0 * qx, q, 0.0, 0.0],
        ],
        shape,
    )
    return AnsatzJet.from_basis(basis, coordinates(net, boundary), lift)


def enriched_cd_ansatz(net: NetJet, boundary: NetJet, layer: Jet, x: ArrayLike) -> AnsatzJet:
    """
    ũ = (x-1)(û(x) - û(0)v(x)) for an outflow layer v with v(0) = 1
    """
    v, vx, vxx = layer
    p = np.asarray(x, dtype=float) - 1.0
    basis = _basis(
        [
            [p, 0.0, 0.0, -p * v, 0.0],
            [1.0, p, 0.0, -(v + p * vx), 0.0],
            [0.0, 2.0, p, -(2.0 * vx + p * vxx), 0.0],
        ],
        np.shape(net.u),
    )
    return AnsatzJet.from_basis(basis, coordinates(net, boundary))


def enriched_rd_ansatz(net: NetJet, boundary: NetJet, left: Jet, right: Jet) -> AnsatzJet:
    """
    ũ = û(x) - û(0)L(x) - û(1)R(x) with L, R the two wall layers
    """
    lv, lx, lxx = left
    rv, rx, rxx = right
    basis = _basis(
        [
            [1.0, 0.0, 0.0, -lv, -rv],
            [0.0, 1.0, 0.0, -lx, -rx],
            [0.0, 0.0, 1.0, -lxx, -rxx],
        ],
        np.shape(net.u),
    )
    return AnsatzJet.from_basis(basis, coordinates(net, boundary))


def enriched_burgers_ansatz(
    net: NetJet, boundary: NetJet, phi_tilde: Jet, x: ArrayLike, lift: float = -1.0
) -> AnsatzJet:
    """
    ũ = (x-1)û(x) + φ̃(x)û(0) + lift with φ̃(0) = 1
    """
    phi, phi_x, phi_xx = phi_tilde
    p = np.asarray(x, dtype=float) - 1.0
    basis = _basis(
        [
            [p, 0.0, 0.0, phi, 0.0],
            [1.0, p, 0.0, phi_x, 0.0],
            [0.0, 2.0, p, phi_xx, 0.0],
        ],
        np.shape(net.u),
    )
    return AnsatzJet.from_basis(basis, coordinates(net, boundary), lift)


def ansatz_plain(p: NetParams, x: ArrayLike) -> AnsatzJet:
    """
    Plain trial solution ū = x(x-1)û(x)

    Args:
        p: Network parameters
        x: Point(s) in [0, 1]
    """
    return plain_ansatz(eval_jet(p, x), boundary_jet(p), bubble_factor(x))


def ansatz_enriched_cd(p: NetParams, eps: float, x: ArrayLike) -> AnsatzJet:
    """Convection-diffusion trial solution with the e^{-x/ε} corrector"""
    return enriched_cd_ansatz(eval_jet(p, x), boundary_jet(p), exp_layer_jet(eps, x), x)


def ansatz_enriched_rd(p: NetParams, eps: float, x: ArrayLike) -> AnsatzJet:
    """Reaction-diffusion trial solution with layers at both walls"""
    return enriched_rd_ansatz(
        eval_jet(p, x),
        boundary_jet(p),
        sqrt_layer_jet(eps, x, "left"),
        sqrt_layer_jet(eps, x, "right"),
    )


def ansatz_enriched_burgers(p: NetParams, eps: float, u00: float, x: ArrayLike) -> AnsatzJet:
    """
    Burgers trial solution with the normalized corrector φ̃

    Raises:
        DegenerateCorrector: If |1 + u00| <= 1e-12
    """
    return enriched_burgers_ansatz(
        eval_jet(p, x), boundary_jet(p), burgers_phi_tilde_jet(eps, u00, x), x
    )
