"""Negation questions, clopen communication, and machine pairing.

The negation of a question replaces every open with its complement; the
result is always a topology again.  A machine asking a question and the
anti-machine asking its negation share exactly the clopen sets, and they
coincide precisely when the question's family is a sigma-field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import GroundSet, SubsetFamily, Topology, make_topology


@dataclass(frozen=True)
class MachinePair:
    """A question, its negation, and the clopen channel between them."""

    question: Topology
    negation: Topology
    shared: SubsetFamily
    self_dual: bool


def negation_question(t: Topology) -> Topology:
    """The topology of complements of every open of ``t``."""
    full = t.ground.full_mask
    family = SubsetFamily.from_masks((full & ~m for m in t.masks), t.ground)
    return make_topology(family)


def clopen_sets(t: Topology) -> SubsetFamily:
    """Opens whose complement is also open: the shared information."""
    full = t.ground.full_mask
    present = set(t.masks)
    return SubsetFamily.from_masks(
        (m for m in t.masks if full & ~m in present), t.ground
    )


def machines_agree(t: Topology) -> bool:
    """True iff the question equals its negation (every member clopen)."""
    return negation_question(t).masks == t.masks


def is_sigma_field(f: SubsetFamily) -> bool:
    """True iff ``f`` contains the empty set and is closed under complement
    and pairwise union (countable union degenerates to finite here)."""
    full = f.ground.full_mask
    present = set(f.masks)
    if 0 not in present:
        return False
    for a in f.masks:
        if full & ~a not in present:
            return False
    for i, a in enumerate(f.masks):
        for b in f.masks[i + 1 :]:
            if a | b not in present:
                return False
    return True


def make_machine_pair(t: Topology) -> MachinePair:
    negation = negation_question(t)
    return MachinePair(
        question=t,
        negation=negation,
        shared=clopen_sets(t),
        self_dual=negation.masks == t.masks,
    )


def atomic_machine_census(
    topologies: list[Topology],
) -> list[tuple[Topology, Topology, bool]]:
    """Pair each question with its negation and flag the self-dual ones."""
    if topologies:
        ground = topologies[0].ground
        for t in topologies:
            if t.ground != ground:
                raise ValueError("census requires one common ground set")
    out = []
    for t in topologies:
        negation = negation_question(t)
        out.append((t, negation, negation.masks == t.masks))
    return out
