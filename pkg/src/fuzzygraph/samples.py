"""Built-in demonstration graphs.

These are embedded in code (rather than only shipped as data files) so
the repro command cannot drift from what the tests pin down.  Copies of
the same graphs live under data/ for experimentation; a test asserts the
two stay identical.
"""

from __future__ import annotations

from .model import ONE, FuzzyGraph, Membership, build_graph
from .structure import SaturatedCycleSpec, make_saturated_cycle


def five_vertex_tree() -> FuzzyGraph:
    """Five-vertex fuzzy tree whose weakest edge is the only delta edge."""
    return build_graph(
        [(name, ONE) for name in "abcde"],
        [
            ("a", "b", Membership.parse("0.1")),
            ("b", "c", Membership.parse("0.3")),
            ("e", "c", Membership.parse("0.3")),
            ("c", "d", Membership.parse("0.5")),
            ("a", "e", Membership.parse("0.6")),
        ],
    )


def alternating_cycle(n: int, kappa: str, eta: str) -> FuzzyGraph:
    """Saturated fuzzy cycle C_n with grades alternating kappa, eta."""
    spec = SaturatedCycleSpec(n, Membership.parse(kappa), Membership.parse(eta))
    return make_saturated_cycle(spec)
