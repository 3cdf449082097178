from nonhermitian.two_level.dynamics import (
    GeneralizedSolution,
    defective_evolve,
    diagonalized_evolve,
    evolve,
    expansion,
    fixed_basis_evolve,
)
from nonhermitian.two_level.metric import (
    MetricTransform,
    conserved_norm,
    metric_factors,
    metric_inner_product,
    transformed_hamiltonian,
)
from nonhermitian.two_level.model import (
    EigenSystem2,
    ExceptionalReport,
    Regime,
    TwoLevelModel,
    biorthogonality_defect,
    eigenpairs,
    exceptional_identities,
    fixed_basis_system,
    hamiltonian,
    regime,
)

__all__ = [
    "EigenSystem2",
    "ExceptionalReport",
    "GeneralizedSolution",
    "MetricTransform",
    "Regime",
    "TwoLevelModel",
    "biorthogonality_defect",
    "conserved_norm",
    "defective_evolve",
    "diagonalized_evolve",
    "eigenpairs",
    "evolve",
    "exceptional_identities",
    "expansion",
    "fixed_basis_evolve",
    "fixed_basis_system",
    "hamiltonian",
    "metric_factors",
    "metric_inner_product",
    "regime",
    "transformed_hamiltonian",
]
