"""Wire format: a question is a JSON object with "elements" and "opens".

The empty list denotes the empty set; a valid topology document lists
both it and the full element list explicitly.  Serialization is
canonical: opens ascend by bit-vector value, labels follow element
order, output is compact JSON with stable key order.
"""

from __future__ import annotations

import json
from typing import Any

from .core import GroundSet, GroundSetError, Subset, SubsetFamily, make_ground_set
from .calculus import QuestionType, ResolutionOutcome, ResolutionStep


class DocumentError(ValueError):
    """Malformed question document (syntax, schema, or label errors)."""


def parse_question(text: str) -> tuple[GroundSet, SubsetFamily]:
    """Parse a question document; topology axioms are NOT enforced here."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"line {e.lineno}, column {e.colno}: {e.msg}") from None
    if not isinstance(doc, dict):
        raise DocumentError("document must be an object")
    extra = sorted(set(doc) - {"elements", "opens"})
    if extra:
        raise DocumentError(f"unexpected field(s): {', '.join(extra)}")
    for key in ("elements", "opens"):
        if key not in doc:
            raise DocumentError(f"missing field: {key}")
        if not isinstance(doc[key], list):
            raise DocumentError(f"field {key!r} must be a list")
    try:
        ground = make_ground_set(doc["elements"])
    except GroundSetError as e:
        raise DocumentError(f"elements: {e}") from None
    masks = set()
    for i, entry in enumerate(doc["opens"]):
        if not isinstance(entry, list):
            raise DocumentError(f"opens[{i}]: must be a list of labels")
        mask = 0
        for label in entry:
            if not isinstance(label, str) or label not in ground:
                raise DocumentError(f"opens[{i}]: unknown label {label!r}")
            mask |= 1 << ground.index(label)
        masks.add(mask)
    return ground, SubsetFamily.from_masks(masks, ground)


def _dump(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"))


def subset_labels(s: Subset) -> list[str]:
    return list(s.labels())


def family_opens(f: SubsetFamily) -> list[list[str]]:
    return [list(s.labels()) for s in f]


def question_document(ground: GroundSet, family: SubsetFamily) -> str:
    return _dump({"elements": list(ground.labels), "opens": family_opens(family)})


def family_document(family: SubsetFamily) -> str:
    return question_document(family.ground, family)


def outcome_document(outcome: ResolutionOutcome) -> str:
    obj: dict[str, Any] = {"kind": outcome.kind.value}
    if outcome.kind is QuestionType.TYPE_I:
        assert outcome.carrier is not None
        obj["carrier"] = subset_labels(outcome.carrier)
    obj["opens"] = family_opens(outcome.result_family)
    return _dump(obj)


def steps_document(steps: list[ResolutionStep]) -> str:
    out = []
    for step in steps:
        obj: dict[str, Any] = {"point": step.point, "kind": step.kind.value}
        if step.kind is QuestionType.TYPE_I:
            assert step.carrier is not None
            obj["carrier"] = subset_labels(step.carrier)
        obj["opens"] = family_opens(step.family)
        out.append(obj)
    return _dump({"steps": out})
