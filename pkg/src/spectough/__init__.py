"""Graph toughness and distance-spectral radius toolkit."""

from .codecs import parse_graph, write_graph
from .errors import (
    InvalidArgument,
    NotConnectedError,
    NumericFailure,
    ParseError,
    SizeGuardError,
    SpectoughError,
    ToughnessUndefinedError,
)
from .families import (
    OneTough,
    Split,
    SplitFamilyParams,
    TFracTough,
    TIntTough,
    build_extremal,
    build_split,
    closed_form_quotient,
    enumerate_compositions,
    recognize_extremal,
)
from .graph import (
    Graph,
    build_complete,
    components_after_removal,
    disjoint_union,
    join,
    min_degree,
)
from .spectral import (
    charpoly3,
    distance_bounds,
    distance_matrix,
    quotient_matrix,
    spectral_radius,
    wiener_indices,
)
from .toughness import ToughnessResult, is_t_tough, toughness_exact

__version__ = "0.1.0"
