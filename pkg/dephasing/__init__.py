from dephasing.bath import Bath, BathMode, OhmicSpec, discretize_ohmic, spectral_function
from dephasing.entanglement import (
    ScanPoint,
    analytic_concurrence,
    analytic_mu,
    concurrence,
    entanglement_of_formation,
    verify_upper_bound,
)
from dephasing.evolution import (
    DensityMatrix,
    DephasingFactors,
    QubitParams,
    bell_family_state,
    dephasing_factors,
    evolve,
    evolved_bell_family,
)
from dephasing.linalg import hermitian_eigen, psd_sqrt

__all__ = [
    'Bath', 'BathMode', 'OhmicSpec', 'discretize_ohmic', 'spectral_function',
    'ScanPoint', 'analytic_concurrence', 'analytic_mu', 'concurrence',
    'entanglement_of_formation', 'verify_upper_bound',
    'DensityMatrix', 'DephasingFactors', 'QubitParams', 'bell_family_state',
    'dephasing_factors', 'evolve', 'evolved_bell_family',
    'hermitian_eigen', 'psd_sqrt',
]
