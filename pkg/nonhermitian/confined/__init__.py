from nonhermitian.confined.assembly import Coupling, ConfinedModel, assemble
from nonhermitian.confined.basis import BasisIndex, Parity, basis_eval, coupling_integral
from nonhermitian.confined.parameter_sweep import SweepRecord, SweepResult, summarize, sweep
from nonhermitian.confined.propagation import density_series, evolve_confined, truncate_roundoff, wavefunction_eval
from nonhermitian.confined.spectrum import (
    ClassifiedSpectrum,
    Label,
    SpectrumEntry,
    classify,
    decompose,
    pair_count,
    spectrum,
)

__all__ = [
    "BasisIndex",
    "ClassifiedSpectrum",
    "ConfinedModel",
    "Coupling",
    "Label",
    "Parity",
    "SpectrumEntry",
    "SweepRecord",
    "SweepResult",
    "assemble",
    "basis_eval",
    "classify",
    "coupling_integral",
    "decompose",
    "density_series",
    "evolve_confined",
    "pair_count",
    "spectrum",
    "summarize",
    "sweep",
    "truncate_roundoff",
    "wavefunction_eval",
]
