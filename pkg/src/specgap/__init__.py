"""Spectral gaps of extremal regular graphs.

Constructors for the minimum-algebraic-connectivity cubic and quartic
families, dense and quotient spectral tools, proper edge switching, and
exhaustive enumeration certificates.
"""
from .config import TOL, Tolerances
from .errors import SpecGapError
from .graph import (
    BlockDecomposition,
    Graph,
    are_isomorphic,
    block_decomposition,
    canonical_form,
    degree_profile,
    from_graph6,
    is_connected,
    new_graph,
    to_dot,
    to_edge_list,
    to_graph6,
)
from .spectra import (
    SpectralReport,
    eigen_symmetric,
    laplacian_quadratic,
    path_mu_closed_form,
    rayleigh_quotient,
    relaxation_time,
    spectral_report,
)
from .quotient import Partition, QuotientMatrix, is_equitable, mu_from_quotient, quotient_matrix
from .families import (
    BlockKind,
    Brick,
    PathLikeSpec,
    assemble_path_like,
    brick,
    cell_partition,
    conjectured_quartic_min,
    cosine_test_vector,
    cubic_gn,
    cubic_h,
    long_block,
    short_block,
    small_quartic_min,
)
from .switching import (
    SwitchMove,
    elementary_move,
    find_proper_switches,
    is_proper,
    minimize_by_switching,
    proper_labeling,
    rayleigh_delta,
)
from .search import (
    Certificate,
    StructureVerdict,
    aldous_fill_report,
    enumerate_connected_regular,
    find_minimizers,
    verify_quartic_conjecture,
    verify_cubic_theorem,
    verify_quartic_structure,
)

__version__ = "0.1.0"
