"""
Core problem types: kinds, specs, ansatz jets and residual partials
"""
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..correctors import check_burgers_forcing
from ..correctors.burgers import Jet
from .forcing import ConstantForcing, Forcing


# Positions of the affine ansatz coordinates V = (û, û_x, û_xx, û(0), û(1))
V_U, V_UX, V_UXX, V_AT0, V_AT1 = range(5)
N_COORDS = 5


class ProblemKind(str, Enum):
    """Problem classes of the catalogue"""
    HYPERBOLIC = "hyperbolic"
    REGULAR_CD = "regular_cd"
    REGULAR_RD = "regular_rd"
    SINGULAR_CD = "singular_cd"
    SINGULAR_RD = "singular_rd"
    SINGULAR_NCD = "singular_ncd"
    BURGERS = "burgers"

    @property
    def is_regular(self) -> bool:
        return self in REGULAR_COEFFS


REGULAR_COEFFS = {
    ProblemKind.HYPERBOLIC: (0.0, -1.0, 0.0),
    ProblemKind.REGULAR_CD: (1.0, 1.0, 0.0),
    ProblemKind.REGULAR_RD: (1.0, 0.0, 1.0),
}


class BoundaryValues(BaseModel):
    """
    Dirichlet data (α at x=0, β at x=1)

    Burgers uses the sign convention u(0) = -α, u(1) = -β.
    """
    model_config = ConfigDict(frozen=True)

    alpha: float = 0.0
    beta: float = 0.0


class ProblemSpec(BaseModel):
    """
    One boundary value problem of the catalogue

    Fields:
        kind: Problem class
        eps: Perturbation parameter (1 for the regular kinds)
        forcing: Right-hand side f
        coeffs: Diffusion, convection and reaction coefficients (a, b, c)
        bc: Boundary data
        enriched: Use the corrector-enriched ansatz (singular kinds only)
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kind: ProblemKind
    eps: float = Field(default=1.0, gt=0)
    forcing: Forcing = Field(default_factory=ConstantForcing)
    coeffs: Optional[Tuple[float, float, float]] = None
    bc: Optional[BoundaryValues] = None
    enriched: Optional[bool] = None

    @model_validator(mode="after")
    def fill_kind_defaults(self) -> "ProblemSpec":
        kind = self.kind
        if kind.is_regular:
            if self.eps != 1.0:
                raise ValueError(f"{kind.value} has no perturbation parameter; eps must be 1")
            expected = REGULAR_COEFFS[kind]
            if self.coeffs is not None and tuple(self.coeffs) != expected:
                raise ValueError(f"{kind.value} requires coeffs {expected}, got {self.coeffs}")
            if self.enriched:
                raise ValueError(f"{kind.value} has no boundary layer to enrich")
            object.__setattr__(self, "coeffs", expected)
            object.__setattr__(self, "enriched", False)
        else:
            if self.coeffs is not None:
                raise ValueError("coeffs only apply to the regular kinds")
            if self.enriched is None:
                object.__setattr__(self, "enriched", True)

        expected_bc = (
            BoundaryValues(alpha=1.0, beta=1.0)
            if kind == ProblemKind.BURGERS
            else BoundaryValues()
        )
        if self.bc is not None and self.bc != expected_bc:
            raise ValueError(
                f"{kind.value} supports only bc=({expected_bc.alpha}, {expected_bc.beta})"
            )
        object.__setattr__(self, "bc", expected_bc)
        return self

    def __init__(self, **data):
        super().__init__(**data)
        # checked after validation so callers see DataConditionViolation itself
        if self.kind == ProblemKind.BURGERS:
            check_burgers_forcing(self.forcing.antiderivative)

    @property
    def boundary_values(self) -> Tuple[float, float]:
        """Values the solution takes at x=0 and x=1"""
        if self.kind == ProblemKind.BURGERS:
            return -self.bc.alpha, -self.bc.beta
        return self.bc.alpha, self.bc.beta

    @property
    def label(self) -> str:
        return f"{self.kind.value}(eps={self.eps:g}, f={self.forcing.label})"


@dataclass(frozen=True)
class AnsatzJet:
    """
    Trial solution value and derivatives at collocation points

    basis has shape (3, 5) + x.shape: row d holds the coefficients expressing
    the d-th derivative as an affine function of V = (û, û_x, û_xx, û(0), û(1)).
    The training gradient is assembled from it.
    """
    u: np.ndarray
    ux: np.ndarray
    uxx: np.ndarray
    basis: Optional[np.ndarray] = None

    @classmethod
    def from_basis(cls, basis: np.ndarray, coords: np.ndarray, offset: float = 0.0) -> "AnsatzJet":
        u = np.sum(basis[0] * coords, axis=0) + offset
        ux = np.sum(basis[1] * coords, axis=0)
        uxx = np.sum(basis[2] * coords, axis=0)
        return cls(u=u, ux=ux, uxx=uxx, basis=basis)


@dataclass(frozen=True)
class ResidualPartials:
    """Residual values and their partials with respect to V, shape (5,) + x.shape"""
    value: np.ndarray
    wrt: np.ndarray


@dataclass(frozen=True)
class CollocationData:
    """Parameter-independent data at the collocation points"""
    x: np.ndarray
    f: np.ndarray
    layers: Tuple[Jet, ...] = ()
    limit: Optional[np.ndarray] = None


class DifferentialOperator(BaseModel):
    """
    L[u] = -a u'' - b u' + c u + k u³ + m u u'

    Covers every problem of the catalogue; the oracle solver and the
    direct-substitution residual share it.
    """
    model_config = ConfigDict(frozen=True)

    diffusion: float = 0.0
    convection: float = 0.0
    reaction: float = 0.0
    cubic: float = 0.0
    burgers: float = 0.0

    def apply(self, u: np.ndarray, ux: np.ndarray, uxx: np.ndarray) -> np.ndarray:
        return (
            -self.diffusion * uxx
            - self.convection * ux
            + self.reaction * u
            + self.cubic * u ** 3
            + self.burgers * u * ux
        )

    def partials(
        self, u: np.ndarray, ux: np.ndarray, uxx: np.ndarray
    ) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        """∂L/∂u, ∂L/∂u', ∂L/∂u'' pointwise"""
        d_u = self.reaction + 3.0 * self.cubic * u ** 2 + self.burgers * ux
        d_ux = -self.convection + self.burgers * u
        d_uxx = np.full_like(np.asarray(uxx, dtype=float), -self.diffusion)
        return d_u, d_ux, d_uxx

    def residual(self, jet: AnsatzJet, f: np.ndarray) -> ResidualPartials:
        """
        Direct-substitution residual L[ũ] - f with partials through the basis
        """
        value = self.apply(jet.u, jet.ux, jet.uxx) - f
        wrt = None
        if jet.basis is not None:
            d_u, d_ux, d_uxx = self.partials(jet.u, jet.ux, jet.uxx)
            wrt = d_u * jet.basis[0] + d_ux * jet.basis[1] + d_uxx * jet.basis[2]
        return ResidualPartials(value=value, wrt=wrt)
