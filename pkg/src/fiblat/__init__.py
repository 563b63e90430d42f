"""Tensor-product energies of Fibonacci lattices, golden-ratio
combinatorics and exact generalized Dedekind sums.

The package is organized around one chain of reductions: lattice sums
over the level-n rational lattice regroup along the rows of a
golden-ratio integer array, the rows contribute two geometric series
each, and the resulting growth law C*n + D has a slope with an exact
closed form and an intercept computable to certified accuracy.  A
separate exact layer evaluates the generalized sums themselves in
rational arithmetic.
"""

from .asymptotics import (
    AsymptoticConstants,
    CConstant,
    ClosedConstant,
    DConstant,
    ExactConstants,
    ResidualRow,
    SeriesValue,
    ZETA_ROUTES,
    ZetaRoute,
    approximation_errors,
    compute_constants,
    constant_C,
    constant_C_closed,
    constant_D,
    dedekind_zeta,
    delta,
    delta_mp,
    delta_star,
    delta_star_mp,
    exact_sigma2_constants,
    prefactor,
    residual_fit,
)
from .dedekind import (
    apostol_check,
    cos2sin4_closed,
    gen_dedekind_sum,
    hwz_check,
    s13_closed,
    s22_closed,
    s22_from_trig_sum,
    sigma2_closed,
    sigma2_closed_abstract,
    sigma4_closed,
    sigma6_closed,
    sin4_closed,
)
from .energy import (
    EnergyReport,
    RationalLattice,
    energy,
    energy_dft,
    energy_direct,
    fib_sum,
    fib_sum_grouped,
    lattice_points,
    wce_e,
)
from .golden import (
    FibPair,
    GoldenInt,
    fib,
    fib_pair,
    floor_phi_times,
    golden_compare,
    golden_mul,
    golden_norm,
    lucas,
    phi_power,
)
from .kernels import (
    KERNEL_GRAMMAR,
    Kernel,
    bernoulli_number,
    bernoulli_poly,
    cot_power_sums,
    dft_coeff_sum_exact,
    dft_coeffs,
    dft_coeffs_even,
    f_sigma,
    hurwitz_zeta,
    kernel_bernoulli_weight,
    kernel_fsigma,
    kernel_one,
    kernel_trig,
    parse_kernel,
    potential_K,
    zeta,
)
from .verify import SUITE_NAMES, SuiteResult, run_suite, run_suites
from .wythoff import (
    RowTable,
    WythoffRow,
    dual_entry,
    dual_slot,
    fib_signed,
    floor_phi_plus_inv,
    half_fib_witness,
    locate,
    row,
    row_invariant_eta,
    row_table,
    row_threshold_mu,
    rows_below_half_fib,
    wythoff_entry,
    wythoff_entry_extended,
    wythoff_row_entries,
)

__version__ = "0.1.0"

__all__ = [
    "AsymptoticConstants", "CConstant", "ClosedConstant", "DConstant",
    "EnergyReport", "ExactConstants", "FibPair", "GoldenInt", "Kernel",
    "KERNEL_GRAMMAR", "RationalLattice", "ResidualRow", "RowTable",
    "SeriesValue", "SuiteResult", "SUITE_NAMES", "WythoffRow", "ZETA_ROUTES",
    "ZetaRoute", "apostol_check", "approximation_errors", "bernoulli_number",
    "bernoulli_poly", "compute_constants", "constant_C", "constant_C_closed",
    "constant_D", "cos2sin4_closed", "cot_power_sums", "dedekind_zeta",
    "delta", "delta_mp", "delta_star", "delta_star_mp", "dft_coeff_sum_exact",
    "dft_coeffs", "dft_coeffs_even", "dual_entry", "dual_slot", "energy",
    "energy_dft", "energy_direct", "exact_sigma2_constants", "f_sigma", "fib",
    "fib_pair", "fib_signed", "fib_sum", "fib_sum_grouped",
    "floor_phi_plus_inv", "floor_phi_times", "gen_dedekind_sum",
    "golden_compare", "golden_mul", "golden_norm", "half_fib_witness",
    "hurwitz_zeta", "hwz_check", "kernel_bernoulli_weight", "kernel_fsigma",
    "kernel_one", "kernel_trig", "lattice_points", "locate", "lucas",
    "parse_kernel", "phi_power", "potential_K", "prefactor", "residual_fit",
    "row", "row_invariant_eta", "row_table", "row_threshold_mu",
    "rows_below_half_fib", "run_suite", "run_suites", "s13_closed",
    "s22_closed", "s22_from_trig_sum", "sigma2_closed",
    "sigma2_closed_abstract", "sigma4_closed", "sigma6_closed", "sin4_closed",
    "wce_e", "wythoff_entry", "wythoff_entry_extended", "wythoff_row_entries",
    "zeta",
]
