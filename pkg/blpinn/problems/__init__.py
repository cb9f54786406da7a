"""
Problem catalogue: specs, forcings, trial solutions and residuals
"""
from .ansatz import (
    ansatz_enriched_burgers,
    ansatz_enriched_cd,
    ansatz_enriched_rd,
    ansatz_plain,
    boundary_jet,
)
from .base import (
    AnsatzJet,
    BoundaryValues,
    CollocationData,
    DifferentialOperator,
    ProblemKind,
    ProblemSpec,
    ResidualPartials,
)
from .catalogue import (
    BoundaryValueProblem,
    BurgersProblem,
    HyperbolicProblem,
    ProblemFactory,
    RegularCDProblem,
    RegularRDProblem,
    SingularCDProblem,
    SingularNCDProblem,
    SingularRDProblem,
    ansatz,
    direct_residual,
    get_problem,
    limit_solution,
    residual,
)
from .forcing import (
    CallableForcing,
    ConstantForcing,
    CosineForcing,
    Forcing,
    ForcingFactory,
    TabulatedForcing,
    create_forcing,
)

__all__ = [
    "ansatz_enriched_burgers",
    "ansatz_enriched_cd",
    "ansatz_enriched_rd",
    "ansatz_plain",
    "boundary_jet",
    "AnsatzJet",
    "BoundaryValues",
    "CollocationData",
    "DifferentialOperator",
    "ProblemKind",
    "ProblemSpec",
    "ResidualPartials",
    "BoundaryValueProblem",
    "BurgersProblem",
    "HyperbolicProblem",
    "ProblemFactory",
    "RegularCDProblem",
    "RegularRDProblem",
    "SingularCDProblem",
    "SingularNCDProblem",
    "SingularRDProblem",
    "ansatz",
    "direct_residual",
    "get_problem",
    "limit_solution",
    "residual",
    "CallableForcing",
    "ConstantForcing",
    "CosineForcing",
    "Forcing",
    "ForcingFactory",
    "TabulatedForcing",
    "create_forcing",
]
