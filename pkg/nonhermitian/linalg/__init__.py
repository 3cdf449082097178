from nonhermitian.linalg.eigensolver import (
    build_decomposition,
    condition_estimate,
    eig,
    normalize_columns,
    solve_linear,
    spectral_order,
)

__all__ = [
    "build_decomposition",
    "condition_estimate",
    "eig",
    "normalize_columns",
    "solve_linear",
    "spectral_order",
]
