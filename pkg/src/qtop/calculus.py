"""Neighborhood systems, the elimination operator T - N(x), and the
three-way classification of questions.

Removing the neighborhood system of a point from a topology leaves the
opens that avoid the point.  Three outcomes are possible: the remainder is
a topology on a smaller carrier (a sub-question), it is exactly {empty}
(a definite answer), or the point was never in the space at all and the
remainder is empty (an irrelevant question).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import (
    GroundSet,
    Subset,
    SubsetFamily,
    Topology,
    make_ground_set,
    make_topology,
)


class QuestionType(enum.Enum):
    TYPE_I = "type-1"
    TYPE_II = "type-2"
    TYPE_III = "type-3"


@dataclass(frozen=True)
class ResolutionOutcome:
    """Classified result of eliminating one point from a question.

    ``carrier`` is present only for TYPE_I: the union of all opens that
    avoid the point, on which ``result_family`` is a subspace topology.
    """

    kind: QuestionType
    result_family: SubsetFamily
    carrier: Subset | None = None


@dataclass(frozen=True)
class ResolutionStep:
    """One step of an iterated elimination chain."""

    point: str
    kind: QuestionType
    carrier: Subset | None
    family: SubsetFamily


def open_sets_containing(t: Topology, x: str) -> SubsetFamily:
    """The open members of the neighborhood system of ``x``."""
    bit = 1 << t.ground.index(x)
    return SubsetFamily.from_masks((m for m in t.masks if m & bit), t.ground)


def neighborhood_system(t: Topology, x: str) -> SubsetFamily:
    """All supersets of some open set containing ``x`` (not necessarily open)."""
    opens = open_sets_containing(t, x).masks
    # Expand only the inclusion-minimal opens; every superset of a
    # neighborhood is again a neighborhood.
    minimal = [m for m in opens if not any(o != m and o & ~m == 0 for o in opens)]
    full = t.ground.full_mask
    found: set[int] = set()
    for base in minimal:
        rest = full & ~base
        # iterate all supersets of base: base | (submask of rest)
        sub = rest
        while True:
            found.add(base | sub)
            if sub == 0:
                break
            sub = (sub - 1) & rest
    return SubsetFamily.from_masks(found, t.ground)


def resolve_issue(t: Topology, x: str) -> SubsetFamily:
    """The family T - N(x): every open that does not contain ``x``.

    A point outside the ground set yields the empty family (the question
    was irrelevant to this space).
    """
    if x not in t.ground:
        return SubsetFamily((), t.ground)
    bit = 1 << t.ground.index(x)
    return SubsetFamily.from_masks((m for m in t.masks if not m & bit), t.ground)


def classify_question(t: Topology, x: str) -> ResolutionOutcome:
    """Classify the elimination of ``x``: sub-question, definite answer,
    or irrelevant."""
    result = resolve_issue(t, x)
    if x not in t.ground:
        return ResolutionOutcome(QuestionType.TYPE_III, result)
    if result.masks == (0,):
        return ResolutionOutcome(QuestionType.TYPE_II, result)
    carrier_mask = 0
    for m in result.masks:
        carrier_mask |= m
    carrier = Subset(carrier_mask, t.ground)
    return ResolutionOutcome(QuestionType.TYPE_I, result, carrier)


def subspace_topology(t: Topology, a: Subset) -> Topology:
    """Restrict ``t`` to the subset ``a``: intersect every open with ``a``
    and re-pack bits onto the smaller ground set (labels and their relative
    order are inherited)."""
    if a.ground != t.ground:
        raise ValueError("carrier lies over a different ground set")
    sub_ground = make_ground_set(a.labels())
    positions = [i for i in range(t.ground.size) if (a.mask >> i) & 1]
    repacked = set()
    for m in t.masks:
        restricted = m & a.mask
        packed = 0
        for j, i in enumerate(positions):
            if (restricted >> i) & 1:
                packed |= 1 << j
        repacked.add(packed)
    return make_topology(SubsetFamily.from_masks(repacked, sub_ground))


def resolve_sequence(t: Topology, order: list[str]) -> list[ResolutionStep]:
    """Eliminate points in the given order, descending into the subspace
    after every TYPE_I step; stops at the first TYPE_II or TYPE_III."""
    if len(set(order)) != len(order):
        raise ValueError("points to resolve must be distinct")
    steps: list[ResolutionStep] = []
    current = t
    for x in order:
        outcome = classify_question(current, x)
        steps.append(
            ResolutionStep(x, outcome.kind, outcome.carrier, outcome.result_family)
        )
        if outcome.kind is not QuestionType.TYPE_I:
            break
        assert outcome.carrier is not None
        current = subspace_topology(current, outcome.carrier)
    return steps
