"""Ground-state correlators, entanglement bounds, and critical exponents for
antiferromagnetic XXX/XXZ spin chains, with an exact-diagonalization oracle
and a direct localizable-entanglement search on small chains."""

from .model import ChainModel, Family, make_model
from .correlators import (
    CorrelatorValue,
    Kind,
    LukyanovCoupling,
    amplitude_F,
    lukyanov_g,
    lukyanov_le_lower,
    xxx_asymptotic_zz,
    xxx_exact_zz,
    xxx_zz,
    xxz_xx_asymptotic,
    xxz_zz_asymptotic,
)
from .field_theory import (
    Regime,
    ThetaEstimate,
    alpha1,
    alpha2,
    critical_field,
    h0,
    magnetization_near_critical,
    magnetization_small_field,
    susceptibility,
    theta_xxx_near_critical,
    theta_xxx_small_field,
    theta_xxz_near_critical,
    theta_xxz_small_field,
)
from .bethe import BetheSolution, find_fermi_boundary, fractional_charge, solve_dressed_energy, theta_curve, theta_exact
from .quantum import (
    CorrelatorTriple,
    LEBounds,
    assistance_concurrence,
    le_bounds,
    concurrence_pure,
    concurrence_xxx,
    density_from_correlators,
    le_lower_bound,
    le_upper_bound,
    r_eigenvalues_closed,
    vanishing_distance_field,
    vanishing_distance_xxz,
    wootters_concurrence,
)
from .ed import Boundary, FiniteChain, GroundState, build_hamiltonian, correlator, ground_state, reduced_density
from .le_search import LEResult, MeasurementPlan, average_concurrence, enumerate_outcomes, ghz_state, optimize_le

__version__ = "0.1.0"
