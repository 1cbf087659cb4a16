"""Randomized and exhaustive search for counterexamples to two claims.

Claim corollary-star: for every fuzzy tree G with maximum spanning tree
F, WI(G) = WI(F) = CI(F).  Claim theorem-star: the Wiener index of a
saturated fuzzy cycle equals n((n+3)^2 - 6)/16 (kappa + eta).  Both are
false; this module produces concrete witnesses with exact arithmetic on
both sides.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import BadParamsError, NotAFuzzyTreeError
from .indices import connectivity_index, theorem_star_formula, wiener_index
from .model import FuzzyGraph, Membership
from .structure import (
    SaturatedCycleSpec,
    fuzzy_tree_mst,
    make_saturated_cycle,
    random_fuzzy_tree,
)

_TENTH = 100_000  # micro-units per 0.1 grid step of the sweep


class ClaimId(Enum):
    COROLLARY_STAR = "corollary-star"
    THEOREM_STAR = "theorem-star"


@dataclass(frozen=True)
class ClaimVerdict:
    """Outcome of evaluating one claim on one instance.

    ``holds`` is exact equality of lhs and rhs; ``detail`` carries every
    intermediate quantity needed to audit the verdict by hand.
    """

    claim_id: ClaimId
    instance: FuzzyGraph | SaturatedCycleSpec
    lhs: Fraction
    rhs: Fraction
    holds: bool
    detail: dict[str, Fraction]

    @property
    def size(self) -> int:
        if isinstance(self.instance, SaturatedCycleSpec):
            return self.instance.n
        return self.instance.vertex_count


def check_corollary_star(g: FuzzyGraph) -> ClaimVerdict:
    """Evaluate WI(G) = WI(F) = CI(F) on a fuzzy tree.

    The claim is tested exactly as published, with no auxiliary
    hypotheses.  lhs is WI(G), rhs is CI(F); WI(F) is in the detail map.
    """
    tree = fuzzy_tree_mst(g)
    if tree is None:
        raise NotAFuzzyTreeError("corollary-star applies to fuzzy trees only")
    skeleton = g.edge_subgraph(tree.edges)
    wi_g = wiener_index(g)
    wi_f = wiener_index(skeleton)
    ci_f = connectivity_index(skeleton)
    return ClaimVerdict(
        claim_id=ClaimId.COROLLARY_STAR,
        instance=g,
        lhs=wi_g,
        rhs=ci_f,
        holds=(wi_g == wi_f == ci_f),
        detail={"wi_g": wi_g, "wi_f": wi_f, "ci_f": ci_f},
    )


def check_theorem_star(spec: SaturatedCycleSpec) -> ClaimVerdict:
    """Compare the direct Wiener index against the published closed form."""
    cycle = make_saturated_cycle(spec)
    direct = wiener_index(cycle)
    formula = theorem_star_formula(spec)
    return ClaimVerdict(
        claim_id=ClaimId.THEOREM_STAR,
        instance=spec,
        lhs=direct,
        rhs=formula,
        holds=(direct == formula),
        detail={"wiener_direct": direct, "formula": formula},
    )


def _trial_seed(seed: int, index: int) -> int:
    return (seed * 1_000_003 + index) & ((1 << 64) - 1)


def _canonical_key(verdict: ClaimVerdict) -> tuple[int, str]:
    if isinstance(verdict.instance, SaturatedCycleSpec):
        spec = verdict.instance
        return (spec.n, f"cycle n={spec.n} kappa={spec.kappa} eta={spec.eta}")
    return (verdict.instance.vertex_count, verdict.instance.serialize())


def _sweep_specs(size_range: tuple[int, int]) -> list[SaturatedCycleSpec]:
    lo, hi = size_range
    start = max(4, lo + lo % 2)
    specs = []
    for n in range(start, hi + 1, 2):
        for kappa in range(2, 11):
            for eta in range(1, kappa):
                specs.append(
                    SaturatedCycleSpec(
                        n, Membership(kappa * _TENTH), Membership(eta * _TENTH)
                    )
                )
    if not specs:
        raise BadParamsError(
            f"no even cycle length of at least 4 in {lo}..{hi}"
        )
    return specs


def search_counterexamples(
    claim_id: ClaimId,
    trials: int | None = None,
    seed: int = 0,
    size_range: tuple[int, int] | None = None,
) -> list[ClaimVerdict]:
    """Generate instances and return the verdicts that refute the claim.

    corollary-star draws ``trials`` random fuzzy trees with vertex counts
    in ``size_range`` (default 3..8); each trial's randomness is derived
    from (seed, trial index), so results are reproducible and independent
    of evaluation order.  theorem-star sweeps every even cycle length in
    ``size_range`` (default 4..12) against the 0.1-grade grid with
    kappa > eta; ``trials`` caps the sweep when given.  Only verdicts
    with holds = False are returned, sorted by instance size and then by
    canonical serialization.
    """
    if trials is not None and trials < 1:
        raise BadParamsError(f"trials must be >= 1, got {trials}")
    if size_range is not None:
        lo, hi = size_range
        if lo > hi:
            raise BadParamsError(f"empty size range {lo}..{hi}")
    violations: list[ClaimVerdict] = []
    if claim_id is ClaimId.COROLLARY_STAR:
        if trials is None:
            raise BadParamsError("corollary-star search needs a trial count")
        lo, hi = size_range if size_range is not None else (3, 8)
        if lo < 2:
            raise BadParamsError(f"trees need at least 2 vertices, got {lo}")
        for index in range(trials):
            rng = random.Random(_trial_seed(seed, index))
            n = rng.randrange(lo, hi + 1)
            extra = rng.randrange(4)
            tree = random_fuzzy_tree(rng.randrange(1 << 63), n, extra)
            verdict = check_corollary_star(tree)
            if not verdict.holds:
                violations.append(verdict)
    elif claim_id is ClaimId.THEOREM_STAR:
        specs = _sweep_specs(size_range if size_range is not None else (4, 12))
        if trials is not None:
            specs = specs[:trials]
        for spec in specs:
            verdict = check_theorem_star(spec)
            if not verdict.holds:
                violations.append(verdict)
    else:
        raise BadParamsError(f"unknown claim {claim_id!r}")
    violations.sort(key=_canonical_key)
    return violations
