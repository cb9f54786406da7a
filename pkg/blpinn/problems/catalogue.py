"""
Problem catalogue

One class per problem kind. Each knows its operator, limit solution,
corrector and trial solution, and evaluates residuals either in the
expanded form that stays bounded as ε vanishes (enriched ansatz) or by
direct substitution (plain ansatz).
"""
import logging
from abc import ABC
from functools import cached_property, lru_cache
from typing import ClassVar, Dict, List, Tuple, Type

import numpy as np
from numpy.typing import ArrayLike
from scipy.integrate import solve_ivp

from ..correctors import LayerProfile, ProfileKind, burgers_phi_jet, burgers_u0
from ..correctors.burgers import Jet
from ..network import NetJet, NetParams, eval_jet
from .ansatz import (
    boundary_jet,
    bubble_factor,
    enriched_burgers_ansatz,
    enriched_cd_ansatz,
    enriched_rd_ansatz,
    inflow_factor,
    plain_ansatz,
)
from .base import (
    AnsatzJet,
    CollocationData,
    DifferentialOperator,
    ProblemKind,
    ProblemSpec,
    ResidualPartials,
)


logger = logging.getLogger(__name__)

NCD_LIMIT_TOL = 1e-12


class BoundaryValueProblem(ABC):
    """
    Base class for the problems of the catalogue

    Subclasses set kind and override the hooks that differ: operator,
    limit solution, corrector profiles and the expanded residual.
    """

    kind: ClassVar[ProblemKind]

    def __init__(self, spec: ProblemSpec):
        if spec.kind != self.kind:
            raise ValueError(f"{type(self).__name__} cannot handle {spec.kind.value}")
        self.spec = spec

    @property
    def eps(self) -> float:
        return self.spec.eps

    @property
    def enriched(self) -> bool:
        return bool(self.spec.enriched)

    @property
    def operator(self) -> DifferentialOperator:
        raise NotImplementedError

    def limit_solution(self, x: ArrayLike) -> np.ndarray:
        raise ValueError(f"{self.kind.value} has no reduced (ε = 0) problem")

    def layer_profiles(self) -> List[LayerProfile]:
        """Corrector profiles of the boundary layers, empty for regular problems"""
        return []

    def corrector(self, x: ArrayLike) -> Jet:
        """Full (unnormalized) corrector φ with derivatives"""
        raise ValueError(f"{self.kind.value} has no boundary-layer corrector")

    def initial_guess(self, x: ArrayLike) -> np.ndarray:
        """u⁰ + φ, or zero for problems without a limit"""
        x = np.asarray(x, dtype=float)
        if self.kind.is_regular:
            return np.zeros_like(x)
        return self.limit_solution(x) + self.corrector(x)[0]

    # Collocation sweep

    def prepare(self, x: ArrayLike) -> CollocationData:
        """Precompute everything at x that does not depend on the parameters"""
        x = np.asarray(x, dtype=float)
        layers: Tuple[Jet, ...] = ()
        if self.enriched:
            layers = tuple(profile.jet(x) for profile in self.layer_profiles())
        return CollocationData(x=x, f=self.spec.forcing(x), layers=layers)

    def plain_factor(self, x: np.ndarray) -> Jet:
        return bubble_factor(x)

    def build_ansatz(self, net: NetJet, boundary: NetJet, data: CollocationData) -> AnsatzJet:
        lift = self.spec.boundary_values[0]
        return plain_ansatz(net, boundary, self.plain_factor(data.x), lift)

    def expanded_residual(
        self, jet: AnsatzJet, net: NetJet, boundary: NetJet, data: CollocationData
    ) -> ResidualPartials:
        return self.operator.residual(jet, data.f)

    def residual_terms(
        self, net: NetJet, boundary: NetJet, data: CollocationData
    ) -> Tuple[AnsatzJet, ResidualPartials]:
        """
        Ansatz and training residual (expanded when enriched) with partials

        Args:
            net: Network jet at data.x
            boundary: Network jet at x = 0 and x = 1
            data: Output of prepare(data.x)
        """
        jet = self.build_ansatz(net, boundary, data)
        if self.enriched:
            return jet, self.expanded_residual(jet, net, boundary, data)
        return jet, self.operator.residual(jet, data.f)

    # Pointwise evaluation from parameters

    def ansatz(self, p: NetParams, x: ArrayLike) -> AnsatzJet:
        data = self.prepare(x)
        return self.build_ansatz(eval_jet(p, data.x), boundary_jet(p), data)

    def residual(self, p: NetParams, x: ArrayLike) -> np.ndarray:
        data = self.prepare(x)
        return self.residual_terms(eval_jet(p, data.x), boundary_jet(p), data)[1].value

    def direct_residual(self, p: NetParams, x: ArrayLike) -> np.ndarray:
        """L[ũ] - f by substituting the ansatz into the original equation"""
        jet = self.ansatz(p, x)
        return self.operator.apply(jet.u, jet.ux, jet.uxx) - self.spec.forcing(x)


def _constant_partials(shape, *entries: float) -> np.ndarray:
    return np.stack([np.full(shape, entry, dtype=float) for entry in entries])


class RegularProblem(BoundaryValueProblem):
    """-a u'' - b u' + c u = f with ε = 1 and homogeneous data"""

    @property
    def operator(self) -> DifferentialOperator:
        a, b, c = self.spec.coeffs
        return DifferentialOperator(diffusion=a, convection=b, reaction=c)


class HyperbolicProblem(RegularProblem):
    """u' = f, u(0) = 0; only the inflow condition is imposed"""

    kind = ProblemKind.HYPERBOLIC

    def plain_factor(self, x: np.ndarray) -> Jet:
        return inflow_factor(x)


class RegularCDProblem(RegularProblem):
    kind = ProblemKind.REGULAR_CD


class RegularRDProblem(RegularProblem):
    kind = ProblemKind.REGULAR_RD


class SingularCDProblem(BoundaryValueProblem):
    """
    -ε u'' - u' = f, u(0) = u(1) = 0

    Outflow layer at x = 0; the limit keeps the inflow condition u⁰(1) = 0.
    """

    kind = ProblemKind.SINGULAR_CD

    @property
    def operator(self) -> DifferentialOperator:
        return DifferentialOperator(diffusion=self.eps, convection=1.0)

    def limit_solution(self, x: ArrayLike) -> np.ndarray:
        return -self.spec.forcing.antiderivative(x)

    @cached_property
    def limit_at_zero(self) -> float:
        return float(self.limit_solution(0.0))

    def layer_profiles(self) -> List[LayerProfile]:
        return [LayerProfile(kind=ProfileKind.OUTFLOW_EXP, eps=self.eps)]

    def corrector(self, x: ArrayLike) -> Jet:
        v, vx, vxx = self.layer_profiles()[0].jet(x)
        amplitude = -self.limit_at_zero
        return amplitude * v, amplitude * vx, amplitude * vxx

    def build_ansatz(self, net: NetJet, boundary: NetJet, data: CollocationData) -> AnsatzJet:
        if not self.enriched:
            return super().build_ansatz(net, boundary, data)
        return enriched_cd_ansatz(net, boundary, data.layers[0], data.x)

    def expanded_residual(
        self, jet: AnsatzJet, net: NetJet, boundary: NetJet, data: CollocationData
    ) -> ResidualPartials:
        # -ε(x-1)û'' - (x-1+2ε)û' - û - û(0)e^{-x/ε} - f
        eps = self.eps
        p = data.x - 1.0
        layer = data.layers[0][0]
        value = (
            -eps * p * net.uxx
            - (p + 2.0 * eps) * net.ux
            - net.u
            - boundary.u[0] * layer
            - data.f
        )
        wrt = np.stack([
            np.full_like(p, -1.0),
            -(p + 2.0 * eps),
            -eps * p,
            -layer,
            np.zeros_like(p),
        ])
        return ResidualPartials(value=value, wrt=wrt)


class SingularNCDProblem(SingularCDProblem):
    """
    -ε u'' - u' + u³ = f, u(0) = u(1) = 0

    The limit -u⁰' + (u⁰)³ = f, u⁰(1) = 0 is integrated numerically.
    """

    kind = ProblemKind.SINGULAR_NCD

    @property
    def operator(self) -> DifferentialOperator:
        return DifferentialOperator(diffusion=self.eps, convection=1.0, cubic=1.0)

    @cached_property
    def _limit_ode(self):
        forcing = self.spec.forcing
        solution = solve_ivp(
            lambda x, u: u ** 3 - forcing(x),
            (1.0, 0.0),
            [0.0],
            method="DOP853",
            rtol=NCD_LIMIT_TOL,
            atol=NCD_LIMIT_TOL,
            dense_output=True,
        )
        if not solution.success:
            raise ArithmeticError(f"limit solution integration failed: {solution.message}")
        logger.debug(
            "NCD limit integrated with %d steps, u0(0) = %.12g",
            solution.t.size - 1,
            solution.y[0, -1],
        )
        return solution.sol

    def limit_solution(self, x: ArrayLike) -> np.ndarray:
        x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
        return self._limit_ode(x)[0]

    def expanded_residual(
        self, jet: AnsatzJet, net: NetJet, boundary: NetJet, data: CollocationData
    ) -> ResidualPartials:
        linear = super().expanded_residual(jet, net, boundary, data)
        # (x-1)³(û - û(0)e^{-x/ε})³ is ũ³
        w = jet.u
        return ResidualPartials(
            value=linear.value + w ** 3,
            wrt=linear.wrt + 3.0 * w * w * jet.basis[0],
        )


class SingularRDProblem(BoundaryValueProblem):
    """-ε u'' + u = f, u(0) = u(1) = 0, with layers at both walls"""

    kind = ProblemKind.SINGULAR_RD

    @property
    def operator(self) -> DifferentialOperator:
        return DifferentialOperator(diffusion=self.eps, reaction=1.0)

    def limit_solution(self, x: ArrayLike) -> np.ndarray:
        return np.asarray(self.spec.forcing(x), dtype=float)

    def layer_profiles(self) -> List[LayerProfile]:
        return [
            LayerProfile(kind=ProfileKind.LEFT_SQRT_EXP, eps=self.eps),
            LayerProfile(kind=ProfileKind.RIGHT_SQRT_EXP, eps=self.eps),
        ]

    def corrector(self, x: ArrayLike) -> Jet:
        left, right = (profile.jet(x) for profile in self.layer_profiles())
        u0_left, u0_right = self.limit_solution(np.array([0.0, 1.0]))
        return tuple(-u0_left * l - u0_right * r for l, r in zip(left, right))

    def build_ansatz(self, net: NetJet, boundary: NetJet, data: CollocationData) -> AnsatzJet:
        if not self.enriched:
            return super().build_ansatz(net, boundary, data)
        return enriched_rd_ansatz(net, boundary, data.layers[0], data.layers[1])

    def expanded_residual(
        self, jet: AnsatzJet, net: NetJet, boundary: NetJet, data: CollocationData
    ) -> ResidualPartials:
        # both layers solve -εv'' + v = 0, leaving -εû'' + û - f
        shape = np.shape(data.x)
        value = -self.eps * net.uxx + net.u - data.f
        wrt = _constant_partials(shape, 1.0, 0.0, -self.eps, 0.0, 0.0)
        return ResidualPartials(value=value, wrt=wrt)


class BurgersProblem(BoundaryValueProblem):
    """
    -ε u'' + u u' = f, u(0) = u(1) = -1

    Requires 2∫₁ˣ f + 1 > 0 on [0, 1] (checked when the ProblemSpec is built).
    """

    kind = ProblemKind.BURGERS

    @property
    def operator(self) -> DifferentialOperator:
        return DifferentialOperator(diffusion=self.eps, burgers=1.0)

    def limit_solution(self, x: ArrayLike) -> np.ndarray:
        return burgers_u0(self.spec.forcing.antiderivative, x)

    @cached_property
    def limit_at_zero(self) -> float:
        return float(self.limit_solution(0.0))

    def layer_profiles(self) -> List[LayerProfile]:
        return [
            LayerProfile(kind=ProfileKind.BURGERS_PHI, eps=self.eps, u0_at_0=self.limit_at_zero)
        ]

    def corrector(self, x: ArrayLike) -> Jet:
        return burgers_phi_jet(self.eps, self.limit_at_zero, x)

    def prepare(self, x: ArrayLike) -> CollocationData:
        data = super().prepare(x)
        if not self.enriched:
            return data
        return CollocationData(
            x=data.x, f=data.f, layers=data.layers, limit=self.limit_solution(data.x)
        )

    def build_ansatz(self, net: NetJet, boundary: NetJet, data: CollocationData) -> AnsatzJet:
        if not self.enriched:
            return super().build_ansatz(net, boundary, data)
        return enriched_burgers_ansatz(net, boundary, data.layers[0], data.x)

    def expanded_residual(
        self, jet: AnsatzJet, net: NetJet, boundary: NetJet, data: CollocationData
    ) -> ResidualPartials:
        # -2εû' - ε(x-1)û'' + ((x-1)û)'((x-1)û + φ̃* - 1) + (u⁰ - u⁰(0))φ̃*'
        eps = self.eps
        p = data.x - 1.0
        phi, phi_x, _ = data.layers[0]
        at0 = boundary.u[0]
        w = p * net.u
        w_x = net.u + p * net.ux
        shifted = w + phi * at0 - 1.0
        outer = data.limit - self.limit_at_zero
        value = -2.0 * eps * net.ux - eps * p * net.uxx + w_x * shifted + outer * phi_x * at0 - data.f
        wrt = np.stack([
            shifted + w_x * p,
            -2.0 * eps + p * shifted,
            -eps * p,
            w_x * phi + outer * phi_x,
            np.zeros_like(p),
        ])
        return ResidualPartials(value=value, wrt=wrt)


class ProblemFactory:
    """Factory mapping problem kinds to catalogue classes"""

    _problems: Dict[ProblemKind, Type[BoundaryValueProblem]] = {
        ProblemKind.HYPERBOLIC: HyperbolicProblem,
        ProblemKind.REGULAR_CD: RegularCDProblem,
        ProblemKind.REGULAR_RD: RegularRDProblem,
        ProblemKind.SINGULAR_CD: SingularCDProblem,
        ProblemKind.SINGULAR_RD: SingularRDProblem,
        ProblemKind.SINGULAR_NCD: SingularNCDProblem,
        ProblemKind.BURGERS: BurgersProblem,
    }

    @classmethod
    def create(cls, spec: ProblemSpec) -> BoundaryValueProblem:
        """
        Create the problem object for a spec

        Raises:
            ValueError: If no class is registered for spec.kind
        """
        if spec.kind not in cls._problems:
            supported = ", ".join(kind.value for kind in cls._problems)
            raise ValueError(f"Unsupported problem kind: {spec.kind}. Supported kinds: {supported}")
        return cls._problems[spec.kind](spec)

    @classmethod
    def register_problem(cls, kind: ProblemKind, problem_class: Type[BoundaryValueProblem]):
        cls._problems[kind] = problem_class

    @classmethod
    def list_problems(cls) -> list:
        return [kind.value for kind in cls._problems]


@lru_cache(maxsize=64)
def get_problem(spec: ProblemSpec) -> BoundaryValueProblem:
    """Shared problem object per spec, so cached limit solutions are reused"""
    return ProblemFactory.create(spec)


def limit_solution(spec: ProblemSpec, x: ArrayLike) -> np.ndarray:
    """
    Solution u⁰ of the reduced problem

    Raises:
        ValueError: For the regular kinds
        DataConditionViolation: Burgers forcing violates the radicand condition
    """
    return get_problem(spec).limit_solution(x)


def ansatz(spec: ProblemSpec, p: NetParams, x: ArrayLike) -> AnsatzJet:
    """Trial solution of spec (enriched or plain) at x"""
    return get_problem(spec).ansatz(p, x)


def residual(spec: ProblemSpec, p: NetParams, x: ArrayLike) -> np.ndarray:
    """Pointwise training residual: expanded form when enriched, direct otherwise"""
    return get_problem(spec).residual(p, x)


def direct_residual(spec: ProblemSpec, p: NetParams, x: ArrayLike) -> np.ndarray:
    """Pointwise residual by direct substitution into the original equation"""
    return get_problem(spec).direct_residual(p, x)

