"""
Reference solutions on a mesh with natural cubic spline interpolation
"""
from enum import Enum
from pathlib import Path
from typing import Callable, Optional, Union

import numpy as np
import pandas as pd
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, PrivateAttr, field_validator, model_validator
from scipy.interpolate import CubicSpline


CSV_FLOAT_FORMAT = "%.10e"


class ProvenanceKind(str, Enum):
    CLOSED_FORM = "closed_form"
    ORACLE_SOLVER = "oracle_solver"


class Provenance(BaseModel):
    """Where reference values came from"""
    model_config = ConfigDict(frozen=True)

    kind: ProvenanceKind
    mesh_size: Optional[int] = None
    newton_iters: Optional[int] = None


class ReferenceSolution(BaseModel):
    """
    Nodal values of a reference solution and their spline interpolant

    Fields:
        mesh: Strictly increasing nodes from 0 to 1
        values: Solution values at the nodes
        provenance: Closed form or oracle solve
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    mesh: np.ndarray
    values: np.ndarray
    provenance: Provenance

    _spline: CubicSpline = PrivateAttr()

    @field_validator("mesh", "values", mode="before")
    @classmethod
    def as_readonly_vector(cls, value: ArrayLike) -> np.ndarray:
        array = np.array(value, dtype=float).reshape(-1)
        array.setflags(write=False)
        return array

    @model_validator(mode="after")
    def check_mesh(self) -> "ReferenceSolution":
        if self.mesh.size < 2 or self.mesh.size != self.values.size:
            raise ValueError("mesh and values must have the same length of at least 2")
        if self.mesh[0] != 0.0 or self.mesh[-1] != 1.0:
            raise ValueError("reference mesh must span [0, 1] exactly")
        if np.any(np.diff(self.mesh) <= 0.0):
            raise ValueError("reference mesh must be strictly increasing")
        return self

    def model_post_init(self, __context) -> None:
        self._spline = CubicSpline(self.mesh, self.values, bc_type="natural")

    @classmethod
    def from_function(cls, func: Callable[[np.ndarray], np.ndarray], mesh: ArrayLike) -> "ReferenceSolution":
        """Sample a closed-form solution on mesh"""
        mesh = np.asarray(mesh, dtype=float)
        return cls(
            mesh=mesh,
            values=func(mesh),
            provenance=Provenance(kind=ProvenanceKind.CLOSED_FORM, mesh_size=mesh.size - 1),
        )

    def __call__(self, x: ArrayLike) -> np.ndarray:
        return self.interpolate(x)

    def interpolate(self, x: ArrayLike) -> np.ndarray:
        """Spline value at x; exact at the mesh nodes"""
        x = np.asarray(x, dtype=float)
        values = self._spline(x)
        # nodes return their stored value bit-for-bit
        index = np.clip(np.searchsorted(self.mesh, x), 0, self.mesh.size - 1)
        on_node = self.mesh[index] == x
        return np.where(on_node, self.values[index], values)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"x": self.mesh, "u": self.values})

    def to_csv(self, path: Union[str, Path]) -> Path:
        """Write columns x, u"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.to_frame().to_csv(path, index=False, float_format=CSV_FLOAT_FORMAT)
        return path


def interpolate(ref: ReferenceSolution, x: ArrayLike) -> np.ndarray:
    """Natural cubic spline interpolation of ref at x"""
    return ref.interpolate(x)
