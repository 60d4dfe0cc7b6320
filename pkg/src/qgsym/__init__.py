"""qgsym: spectra of metric graphs with cyclic symmetry.

Builds cycles, circulant graphs and Cartesian products of cycles, decomposes
functions and the Laplacian by cyclic-group irreps, constructs quotient
graphs with quasi-periodic vertex conditions, and computes/factorizes
secular determinants to extract Laplacian spectra numerically.
"""

from .graphs import (
    MetricGraph,
    make_graph,
    smooth_degree2,
    standard_condition,
    subdivide_midpoints,
)
from .groups import (
    CyclicGroup,
    Irrep,
    ProductIrrep,
    crt_index,
    irrep_sum,
    irrep_value,
    product_irrep_value,
)
from .actions import (
    FundamentalDomain,
    GraphAction,
    fundamental_domain,
    lift_action_subdivided,
    orbit,
    validate_action,
)
from .builders import (
    cartesian_product,
    circulant_graph,
    cycle_graph,
    product_action,
    product_circulant_isomorphism,
    torus_action,
)
from .scattering import (
    QuasiPeriodic,
    SecularSystem,
    Standard,
    build_secular_system,
    secular_det,
    standard_conditions,
    vertex_scattering_quasiperiodic,
    vertex_scattering_standard,
)
from .quotient import (
    QuotientSpec,
    all_quotient_specs,
    quotient_dispersion_real,
    quotient_graph,
    quotient_secular_closed,
    quotient_system,
    secular_product,
    torus_secular_system,
)
from .spectra import (
    Spectrum,
    compare_spectra,
    find_roots_modulus,
    find_roots_real,
    find_roots_unitary,
    merge_spectra,
    weyl_count_check,
    winding_number,
)
from .decompose import (
    SampledFunction,
    constant_function,
    from_callable,
    l2_inner,
    l2_norm_sq,
    project,
    pull_back,
    quasi_periodicity_residual,
    random_function,
)

__version__ = "0.1.0"
