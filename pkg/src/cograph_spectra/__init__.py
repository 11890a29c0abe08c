"""Exact adjacency spectra of cographs computed on their cotrees."""

from .balanced import (
    BalancedSpectrum,
    GammaTable,
    boundary_eigenvalue,
    full_spectrum,
    gamma,
    level_multiplicity,
    residual_eigenvalue,
    x_level,
)
from .cotree import (
    BalancedParams,
    Cotree,
    Graph,
    Kind,
    NotACograph,
    balance_completion,
    balanced_cotree,
    expand_to_graph,
    normalize,
    parse_cotree,
    parse_edge_list,
    recognize_cograph,
    serialize_cotree,
)
from .diagonalize import (
    DiagResult,
    InertiaTriple,
    SpectrumMultiset,
    diagonalize_shifted,
    eigenvalue_counts,
    integer_spectrum,
    is_integral,
    locate_all,
    multiplicity,
)
from .interlacing import Bound, EigenBounds, estimate_spectrum, interlace, refine
from .numeric import Rational, format_rational, parse_rational

__version__ = "0.1.0"
