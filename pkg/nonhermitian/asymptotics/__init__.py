from nonhermitian.asymptotics.tail import (
    Side,
    TailExpansion,
    asymptotic_psi,
    consistency_flag,
    leading_term_coefficient,
    potential_coefficient,
    residual_check,
    series_coefficients,
    series_exponents,
    solve_tail_power,
    tail_modulus,
    tail_parameters,
)

__all__ = [
    "Side",
    "TailExpansion",
    "asymptotic_psi",
    "consistency_flag",
    "leading_term_coefficient",
    "potential_coefficient",
    "residual_check",
    "series_coefficients",
    "series_exponents",
    "solve_tail_power",
    "tail_modulus",
    "tail_parameters",
]
