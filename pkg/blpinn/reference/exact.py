"""
Closed-form solutions
"""
from typing import Callable, Optional

import numpy as np
from numpy.typing import ArrayLike

from ..problems import ConstantForcing, CosineForcing, ProblemKind, ProblemSpec


def _check_eps(eps: float) -> None:
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")


def exact_cd(eps: float, x: ArrayLike) -> np.ndarray:
    """
    -ε u'' - u' = 1, u(0) = u(1) = 0

    u = (1 - e^{-x/ε})/(1 - e^{-1/ε}) - x, written with expm1 so that it
    neither overflows nor loses digits for large or small ε.
    """
    _check_eps(eps)
    x = np.asarray(x, dtype=float)
    return np.expm1(-x / eps) / np.expm1(-1.0 / eps) - x


def exact_cd_cosine(eps: float, x: ArrayLike) -> np.ndarray:
    """
    -ε u'' - u' = cos x, u(0) = u(1) = 0
    """
    _check_eps(eps)
    x = np.asarray(x, dtype=float)
    a = eps / (1.0 + eps * eps)
    b = -1.0 / (1.0 + eps * eps)
    c2 = (a * (1.0 - np.cos(1.0)) - b * np.sin(1.0)) / np.expm1(-1.0 / eps)
    c1 = -a - c2
    return c1 + c2 * np.exp(-x / eps) + a * np.cos(x) + b * np.sin(x)


def exact_rd(eps: float, x: ArrayLike) -> np.ndarray:
    """
    -ε u'' + u = 1, u(0) = u(1) = 0

    u = 1 - cosh((x-½)/√ε)/cosh(1/(2√ε)), with the ratio of hyperbolic
    cosines written in decaying exponentials only.
    """
    _check_eps(eps)
    x = np.asarray(x, dtype=float)
    root = np.sqrt(eps)
    a = (x - 0.5) / root
    b = 0.5 / root
    ratio = (np.exp(a - b) + np.exp(-a - b)) / (1.0 + np.exp(-2.0 * b))
    return 1.0 - ratio


def exact_solution(spec: ProblemSpec) -> Optional[Callable[[ArrayLike], np.ndarray]]:
    """
    Closed-form solution of spec when one is known, otherwise None

    Known: the hyperbolic problem for any forcing, and constant (or, for
    convection-diffusion, cosine) forcing of the linear kinds.
    """
    kind, forcing = spec.kind, spec.forcing
    if kind == ProblemKind.HYPERBOLIC:
        return lambda x: forcing.antiderivative(x) - forcing.antiderivative(0.0)

    if isinstance(forcing, ConstantForcing):
        c = forcing.value
        if kind in (ProblemKind.SINGULAR_CD, ProblemKind.REGULAR_CD):
            return lambda x: c * exact_cd(spec.eps, x)
        if kind in (ProblemKind.SINGULAR_RD, ProblemKind.REGULAR_RD):
            return lambda x: c * exact_rd(spec.eps, x)

    if isinstance(forcing, CosineForcing) and kind in (ProblemKind.SINGULAR_CD, ProblemKind.REGULAR_CD):
        return lambda x: exact_cd_cosine(spec.eps, x)
    return None
