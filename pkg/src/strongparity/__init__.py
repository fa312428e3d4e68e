"""Strong parity property of graphs: deciders, certificates, constructions."""

from .constructions import build_counterexample, circular_ladder, complete_graph
from .errors import CapacityError, ContractError, GraphInputError, ParityError, SppError, StructureError
from .graph import Graph, components_excluding, cut_size, degree, edge_connectivity
from .parity import (
    DegreeBounds,
    eta,
    exists_parity_factor_bruteforce,
    exists_parity_factor_lovasz,
    guan_parity_subgraph,
    is_parity_factor,
)
from .strong import (
    SppCertificate,
    Verdict,
    certify_no_factor,
    deficiency,
    encode_bounds_for_X,
    extract_violating_X,
    find_violating_set,
    has_spp_by_characterization,
    has_spp_by_definition,
)

__all__ = [
    "CapacityError", "ContractError", "DegreeBounds", "Graph", "GraphInputError", "ParityError",
    "SppCertificate", "SppError", "StructureError", "Verdict", "build_counterexample",
    "certify_no_factor", "circular_ladder", "complete_graph", "components_excluding", "cut_size",
    "deficiency", "degree", "edge_connectivity", "encode_bounds_for_X", "eta",
    "exists_parity_factor_bruteforce", "exists_parity_factor_lovasz", "extract_violating_X",
    "find_violating_set", "guan_parity_subgraph", "has_spp_by_characterization",
    "has_spp_by_definition", "is_parity_factor",
]
