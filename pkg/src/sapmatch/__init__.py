"""Maximum-cardinality matching in general graphs by phased shortest
augmenting paths, with optimality certificates."""

from .certificate import (CertificateLabeling, Verdict, build_certificate,
                          verify_certificate)
from .generators import gen_random, gen_short_chains, gen_short_long_chains
from .graph import (Graph, Matching, ParseError, matching_size, parse_graph,
                    serialize_graph, validate_matching)
from .matcher import SolveResult, max_matching

__all__ = [
    "CertificateLabeling", "Graph", "Matching", "ParseError", "SolveResult",
    "Verdict", "build_certificate", "gen_random", "gen_short_chains",
    "gen_short_long_chains", "matching_size", "max_matching", "parse_graph",
    "serialize_graph", "validate_matching", "verify_certificate",
]

__version__ = "0.1.0"
