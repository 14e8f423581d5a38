"""Top-level driver: repeat search, contraction and path extraction until no
augmenting path is left."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .certificate import CertificateLabeling, build_certificate
from .graph import Graph, Matching, matching_size, validate_matching
from .phase1 import Tracer, run_phase1
from .phase2 import ContractedView, revert_breakthrough_phase
from .phase3 import run_phase3


@dataclass
class SolveResult:
    matching: Matching
    iterations: int = 0
    delta_breaks: list[int] = field(default_factory=list)
    paths_per_iteration: list[int] = field(default_factory=list)
    certificate: Optional[CertificateLabeling] = None

    @property
    def size(self) -> int:
        return matching_size(self.matching)

    def stats(self, g: Graph) -> dict:
        return {
            "n": g.n,
            "m": g.m,
            "matching_size": self.size,
            "iterations": self.iterations,
            "delta_breaks": list(self.delta_breaks),
            "paths_per_iteration": list(self.paths_per_iteration),
        }


def iteration_bound(n: int) -> int:
    """Safe upper bound on the number of augmentation rounds."""
    ceil_sqrt = math.isqrt(n - 1) + 1 if n > 0 else 0
    return 2 * ceil_sqrt + 2


def max_matching(g: Graph, want_certificate: bool = False,
                 initial: Optional[Matching] = None, tracer: Tracer = None,
                 debug: bool = False) -> SolveResult:
    """Maximum-cardinality matching of ``g``.

    Starts from ``initial`` (copied) or the empty matching. Each round
    augments along a maximal set of vertex-disjoint shortest augmenting
    paths. With ``want_certificate`` a final exhaustive search labels the
    vertices so that the labeling proves optimality. ``debug`` turns on
    the internal consistency checks of every part.
    """
    m = initial.copy() if initial is not None else Matching.empty(g.n)
    if debug:
        ok, problems = validate_matching(g, m)
        if not ok:
            raise ValueError("initial matching is invalid: " + "; ".join(problems))
    res = SolveResult(matching=m)
    while True:
        p1 = run_phase1(g, m, full_run=False, tracer=tracer, debug=debug)
        if not p1.found:
            break
        revert_breakthrough_phase(p1.state)
        view = ContractedView(p1.state, p1.delta_break)
        if tracer is not None:
            for (uh, vh, kind, _u, _v) in view.h_edges():
                tracer(f"H-edge {uh + 1} {vh + 1} kind {kind}")
        cp = run_phase3(p1.state, view, m, tracer=tracer, debug=debug)
        if not len(cp):
            raise AssertionError("breakthrough found but no augmenting path "
                                 "extracted")
        res.iterations += 1
        res.delta_breaks.append(p1.delta_break)
        res.paths_per_iteration.append(len(cp))
        if debug:
            ok, problems = validate_matching(g, m)
            if not ok:
                raise AssertionError("; ".join(problems))
    if want_certificate:
        final = run_phase1(g, m, full_run=True, debug=debug)
        if final.found:
            raise AssertionError("exhaustive search found an augmenting path "
                                 "the bounded search missed")
        res.certificate = build_certificate(g, m, final.state)
    return res
