"""Ground sets, bit-vector subsets, subset families, and topology axioms.

Every set of assertions is a bitmask over a fixed, ordered ground set:
label i corresponds to bit i.  All values here are immutable; families
keep their members sorted ascending by mask, so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_GROUND_SIZE = 16


class GroundSetError(ValueError):
    """Invalid ground-set construction (duplicate, empty, or too many labels)."""


class UnknownLabelError(ValueError):
    """A label that does not belong to the ground set."""


class SizeLimitError(ValueError):
    """A size cap (ground width or enumeration limit) was exceeded."""


@dataclass(frozen=True)
class GroundSet:
    """Ordered finite set of irreducible assertions; order fixes bit indices."""

    labels: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def __contains__(self, label: str) -> bool:
        return label in self.labels

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownLabelError(
                f"label {label!r} is not in ground set {list(self.labels)}"
            ) from None

    def subset(self, labels: Iterable[str] = ()) -> "Subset":
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return Subset(mask, self)

    def empty(self) -> "Subset":
        return Subset(0, self)

    def full(self) -> "Subset":
        return Subset(self.full_mask, self)


def make_ground_set(labels: Iterable[str]) -> GroundSet:
    labels = tuple(labels)
    if len(labels) > MAX_GROUND_SIZE:
        raise GroundSetError(
            f"too many elements: {len(labels)} (limit {MAX_GROUND_SIZE})"
        )
    seen = set()
    for label in labels:
        if not isinstance(label, str) or not label:
            raise GroundSetError(f"empty or non-text label: {label!r}")
        if label in seen:
            raise GroundSetError(f"duplicate label: {label!r}")
        seen.add(label)
    return GroundSet(labels)


@dataclass(frozen=True)
class Subset:
    """One subset of a ground set, encoded as a bitmask of its width."""

    mask: int
    ground: GroundSet

    def __post_init__(self) -> None:
        if self.mask & ~self.ground.full_mask:
            raise ValueError(
                f"mask {self.mask:#x} has bits outside ground width {self.ground.size}"
            )

    def labels(self) -> tuple[str, ...]:
        return tuple(
            label for i, label in enumerate(self.ground.labels) if (self.mask >> i) & 1
        )

    def __contains__(self, label: str) -> bool:
        return (self.mask >> self.ground.index(label)) & 1 == 1

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __or__(self, other: "Subset") -> "Subset":
        self._check_ground(other)
        return Subset(self.mask | other.mask, self.ground)

    def __and__(self, other: "Subset") -> "Subset":
        self._check_ground(other)
        return Subset(self.mask & other.mask, self.ground)

    def __sub__(self, other: "Subset") -> "Subset":
        self._check_ground(other)
        return Subset(self.mask & ~other.mask, self.ground)

    def __le__(self, other: "Subset") -> bool:
        self._check_ground(other)
        return self.mask & ~other.mask == 0

    def complement(self) -> "Subset":
        return Subset(self.ground.full_mask & ~self.mask, self.ground)

    def _check_ground(self, other: "Subset") -> None:
        if other.ground != self.ground:
            raise ValueError("subsets lie over different ground sets")

    def __repr__(self) -> str:
        return f"Subset({{{','.join(self.labels())}}})"


def complement(s: Subset) -> Subset:
    return s.complement()


@dataclass(frozen=True)
class SubsetFamily:
    """Duplicate-free collection of subsets, sorted ascending by mask.

    The direct constructor demands canonical input; use ``of`` to
    canonicalize an arbitrary iterable.
    """

    members: tuple[Subset, ...]
    ground: GroundSet

    def __post_init__(self) -> None:
        prev = -1
        for s in self.members:
            if s.ground != self.ground:
                raise ValueError("family member lies over a different ground set")
            if s.mask <= prev:
                raise ValueError("family members must be strictly ascending by mask")
            prev = s.mask

    @classmethod
    def of(cls, subsets: Iterable[Subset], ground: GroundSet) -> "SubsetFamily":
        masks = sorted({s.mask for s in subsets})
        members = tuple(Subset(m, ground) for m in masks)
        return cls(members, ground)

    @classmethod
    def from_masks(cls, masks: Iterable[int], ground: GroundSet) -> "SubsetFamily":
        members = tuple(Subset(m, ground) for m in sorted(set(masks)))
        return cls(members, ground)

    @property
    def masks(self) -> tuple[int, ...]:
        return tuple(s.mask for s in self.members)

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s: Subset) -> bool:
        return s.ground == self.ground and s.mask in set(self.masks)


@dataclass(frozen=True)
class AxiomViolation:
    """First failed topology axiom, with the sets that witness the failure."""

    axiom: str  # "C1", "C2" or "C3"
    message: str
    witnesses: tuple[Subset, ...] = ()


class TopologyError(ValueError):
    def __init__(self, violation: AxiomViolation):
        super().__init__(f"{violation.axiom} violated: {violation.message}")
        self.violation = violation


def is_topology(family: SubsetFamily) -> tuple[bool, AxiomViolation | None]:
    """Check axioms C1-C3; on failure report the first violation found.

    Unions are checked pairwise only: a finite family closed under binary
    union is closed under arbitrary union.
    """
    ground = family.ground
    masks = family.masks
    present = set(masks)
    if 0 not in present:
        return False, AxiomViolation("C1", "the empty set is missing")
    if ground.full_mask not in present:
        return False, AxiomViolation("C1", "the full ground set is missing")
    for i, a in enumerate(masks):
        for b in masks[i + 1 :]:
            if a | b not in present:
                wa, wb = Subset(a, ground), Subset(b, ground)
                return False, AxiomViolation(
                    "C2",
                    f"union of {wa!r} and {wb!r} is not in the family",
                    (wa, wb),
                )
            if a & b not in present:
                wa, wb = Subset(a, ground), Subset(b, ground)
                return False, AxiomViolation(
                    "C3",
                    f"intersection of {wa!r} and {wb!r} is not in the family",
                    (wa, wb),
                )
    return True, None


@dataclass(frozen=True)
class Topology:
    """A subset family satisfying C1-C3: a question, its opens the answers.

    The direct constructor trusts its input; ``make_topology`` validates.
    """

    family: SubsetFamily

    @property
    def ground(self) -> GroundSet:
        return self.family.ground

    @property
    def masks(self) -> tuple[int, ...]:
        return self.family.masks

    def __iter__(self) -> Iterator[Subset]:
        return iter(self.family)

    def __len__(self) -> int:
        return len(self.family)

    @classmethod
    def discrete(cls, ground: GroundSet) -> "Topology":
        return cls(SubsetFamily.from_masks(range(ground.full_mask + 1), ground))

    @classmethod
    def indiscrete(cls, ground: GroundSet) -> "Topology":
        return cls(SubsetFamily.from_masks({0, ground.full_mask}, ground))


def make_topology(family: SubsetFamily) -> Topology:
    ok, violation = is_topology(family)
    if not ok:
        assert violation is not None
        raise TopologyError(violation)
    return Topology(family)


def generated_topology(family: SubsetFamily) -> Topology:
    """Smallest topology containing every member of ``family``.

    Seeds with the empty and full sets, then closes under pairwise union
    and intersection to a fixpoint (which covers arbitrary unions too).
    """
    ground = family.ground
    closed = {0, ground.full_mask} | set(family.masks)
    frontier = list(closed)
    while frontier:
        m = frontier.pop()
        for other in list(closed):
            for w in (m | other, m & other):
                if w not in closed:
                    closed.add(w)
                    frontier.append(w)
    return Topology(SubsetFamily.from_masks(closed, ground))
