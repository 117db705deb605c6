"""The dichotomy decision: reduce by involutions, read off the verdict, and
extract a verified hardness gadget as the witness on the hard side."""

from __future__ import annotations

from dataclasses import dataclass

from .automorphisms import ReductionTrace, involution_free_reduction
from .errors import PreconditionError
from .gadgets import HardnessGadget
from .gadgetfind import find_hardness_gadget
from .graphs import Graph, components, edge_on_two_cycles, induced_subgraph, is_cactus

POLYNOMIAL_TIME = "PolynomialTime"
PARITY_P_COMPLETE = "ParityPComplete"


@dataclass
class Classification:
    verdict: str
    trace: ReductionTrace
    witness_graph: Graph | None = None
    witness_vertices: tuple[int, ...] | None = None  # ids inside the reduction
    gadget: HardnessGadget | None = None


def classify(h: Graph) -> Classification:
    """Decide tractability of counting homomorphisms into h modulo 2.

    Requires only the edge condition (every edge on at most one cycle);
    connectivity is not needed, components are handled via the reduction.
    On the hard side the witness is a verified hardness gadget inside a
    multi-vertex component of the involution-free reduction.
    """
    if not is_cactus(h):
        witness = edge_on_two_cycles(h)
        raise PreconditionError(
            f"edge {witness} lies on more than one cycle; input rejected"
        )
    trace = involution_free_reduction(h)
    final = trace.final
    if final.n <= 1:
        return Classification(verdict=POLYNOMIAL_TIME, trace=trace)
    big = [c for c in components(final) if len(c) >= 2]
    comp = min(big, key=min)
    sub = induced_subgraph(final, comp)
    gadget = find_hardness_gadget(sub.graph)
    return Classification(
        verdict=PARITY_P_COMPLETE,
        trace=trace,
        witness_graph=sub.graph,
        witness_vertices=sub.to_parent,
        gadget=gadget,
    )
