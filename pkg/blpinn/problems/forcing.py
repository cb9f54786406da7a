"""
Forcing terms f(x) with antiderivatives

Each forcing provides values and ∫₁ˣ f(s) ds, which every limit solution
needs. Selectors such as "const:1", "cos" or "file:data.csv" are resolved
by ForcingFactory.
"""
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Callable, Dict, Optional

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike
from scipy.integrate import quad
from scipy.interpolate import CubicSpline


QUAD_ABS_TOL = 1e-12


class Forcing(ABC):
    """Base class for right-hand sides f(x)"""

    label: str = "forcing"

    @abstractmethod
    def __call__(self, x: ArrayLike) -> np.ndarray:
        """Evaluate f at x"""
        pass

    @abstractmethod
    def antiderivative(self, x: ArrayLike) -> np.ndarray:
        """∫₁ˣ f(s) ds"""
        pass

    def integral(self, a: ArrayLike, b: ArrayLike) -> np.ndarray:
        """∫ₐᵇ f(s) ds"""
        return self.antiderivative(b) - self.antiderivative(a)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label!r})"


class ConstantForcing(Forcing):
    """f(x) = c"""

    def __init__(self, value: float = 1.0):
        self.value = float(value)
        self.label = f"const:{self.value:g}"

    def __call__(self, x: ArrayLike) -> np.ndarray:
        return np.full_like(np.asarray(x, dtype=float), self.value)

    def antiderivative(self, x: ArrayLike) -> np.ndarray:
        return self.value * (np.asarray(x, dtype=float) - 1.0)


class CosineForcing(Forcing):
    """f(x) = cos x"""

    label = "cos"

    def __call__(self, x: ArrayLike) -> np.ndarray:
        return np.cos(np.asarray(x, dtype=float))

    def antiderivative(self, x: ArrayLike) -> np.ndarray:
        return np.sin(np.asarray(x, dtype=float)) - np.sin(1.0)


class CallableForcing(Forcing):
    """
    User-supplied scalar function

    The antiderivative is computed pointwise by adaptive quadrature.
    """

    def __init__(self, func: Callable[[float], float], label: Optional[str] = None):
        self.func = func
        self.label = label or getattr(func, "__name__", "custom")

    def __call__(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.vectorize(self.func, otypes=[float])(x)

    def _integral_from_one(self, x: float) -> float:
        value, _ = quad(self.func, 1.0, x, epsabs=QUAD_ABS_TOL, limit=200)
        return value

    def antiderivative(self, x: ArrayLike) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        return np.vectorize(self._integral_from_one, otypes=[float])(x)


class TabulatedForcing(Forcing):
    """
    Forcing sampled on a grid and interpolated by a natural cubic spline

    The antiderivative is the exact antiderivative of the spline.
    """

    def __init__(self, nodes: ArrayLike, values: ArrayLike, label: str = "table"):
        nodes = np.asarray(nodes, dtype=float)
        values = np.asarray(values, dtype=float)
        if nodes.ndim != 1 or nodes.size < 2 or nodes.size != values.size:
            raise ValueError("tabulated forcing needs matching 1D node and value arrays")
        if nodes[0] > 0.0 or nodes[-1] < 1.0:
            raise ValueError("tabulated forcing must cover [0, 1]")
        self.spline = CubicSpline(nodes, values, bc_type="natural")
        self._primitive = self.spline.antiderivative()
        self._primitive_at_one = float(self._primitive(1.0))
        self.label = label

    @classmethod
    def from_csv(cls, path: str) -> "TabulatedForcing":
        """Load columns x, f from a CSV file"""
        frame = pd.read_csv(path)
        missing = {"x", "f"} - set(frame.columns)
        if missing:
            raise ValueError(f"forcing file {path} lacks columns {sorted(missing)}")
        frame = frame.sort_values("x")
        return cls(frame["x"].to_numpy(), frame["f"].to_numpy(), label=f"file:{path}")

    def __call__(self, x: ArrayLike) -> np.ndarray:
        return self.spline(np.asarray(x, dtype=float))

    def antiderivative(self, x: ArrayLike) -> np.ndarray:
        return self._primitive(np.asarray(x, dtype=float)) - self._primitive_at_one


class ForcingFactory:
    """Factory resolving forcing selectors"""

    _builders: Dict[str, Callable[[str], Forcing]] = {
        "const": lambda arg: ConstantForcing(float(arg) if arg else 1.0),
        "cos": lambda arg: CosineForcing(),
        "file": lambda arg: TabulatedForcing.from_csv(arg),
    }

    @classmethod
    def create(cls, selector: str) -> Forcing:
        """
        Build a forcing from a selector string

        Args:
            selector: "const:<c>", "cos" or "file:<path>"

        Returns:
            Forcing instance

        Raises:
            ValueError: If the selector is unknown or malformed
        """
        name, _, argument = selector.strip().partition(":")
        name = name.lower()
        if name not in cls._builders:
            supported = ", ".join(cls._builders.keys())
            raise ValueError(
                f"Unsupported forcing: {selector}. Supported forcings: {supported}"
            )
        if name == "file" and not Path(argument).is_file():
            raise ValueError(f"forcing file not found: {argument}")
        try:
            return cls._builders[name](argument)
        except (TypeError, ValueError) as e:
            raise ValueError(f"invalid forcing selector {selector!r}: {e}") from e

    @classmethod
    def register_forcing(cls, name: str, builder: Callable[[str], Forcing]):
        """Register an additional selector prefix"""
        cls._builders[name.lower()] = builder

    @classmethod
    def list_forcings(cls) -> list:
        """List registered selector prefixes"""
        return list(cls._builders.keys())


def create_forcing(selector: str) -> Forcing:
    """Convenience wrapper around ForcingFactory.create"""
    return ForcingFactory.create(selector)
