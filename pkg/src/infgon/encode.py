"""Stable JSON shapes shared by the CLI and the service.

Keys are emitted sorted and payloads contain no timestamps or other
run-dependent data, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import json
from typing import Any

from .arcs import Arc, Classification, InvalidArc, SelfCrossing, Valid
from .quiver import Quiver, to_dot
from .triangulation import (
    Certified,
    Crossing,
    FFVerdict,
    Fountain,
    LocallyFinite,
    Maximal,
    Missing,
    Refuted,
    SplitFountains,
    Unknown,
)

__all__ = [
    "arc_json",
    "classification_json",
    "validation_json",
    "maximality_json",
    "certificate_json",
    "ff_json",
    "quiver_json",
    "dumps",
]


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": ")) + "\n"


def arc_json(a: Arc) -> list[int]:
    return [a.left, a.right]


def classification_json(c: Classification) -> dict:
    return {
        "locally_finite": c.locally_finite,
        "left_fountains": sorted(c.left_fountains),
        "right_fountains": sorted(c.right_fountains),
        "fountains": sorted(c.fountains),
    }


def validation_json(v) -> dict:
    if isinstance(v, Valid):
        return {"valid": True}
    if isinstance(v, InvalidArc):
        return {
            "valid": False,
            "kind": "invalid_arc",
            "orbit_index": v.orbit_index,
            "k": v.k,
        }
    assert isinstance(v, SelfCrossing)
    return {
        "valid": False,
        "kind": "self_crossing",
        "first": arc_json(v.first),
        "second": arc_json(v.second),
    }


def maximality_json(v) -> dict:
    if isinstance(v, Maximal):
        return {"maximal": True}
    if isinstance(v, Missing):
        return {"maximal": False, "kind": "missing", "witness": arc_json(v.witness)}
    assert isinstance(v, Crossing)
    return {
        "maximal": False,
        "kind": "crossing",
        "first": arc_json(v.first),
        "second": arc_json(v.second),
    }


def certificate_json(c) -> dict:
    if isinstance(c, Certified):
        return {
            "certified": True,
            "window": [c.window.lo, c.window.hi],
        }
    if isinstance(c, Refuted):
        return {"certified": False, "kind": "refuted", "witness": arc_json(c.witness)}
    assert isinstance(c, Unknown)
    return {"certified": False, "kind": "unknown", "reason": c.reason}


def ff_json(v: FFVerdict) -> dict:
    reason = v.reason
    if isinstance(reason, LocallyFinite):
        r: dict = {"kind": "locally_finite"}
    elif isinstance(reason, Fountain):
        r = {"kind": "fountain", "vertex": reason.vertex}
    else:
        assert isinstance(reason, SplitFountains)
        r = {"kind": "split_fountains", "left": reason.left, "right": reason.right}
    return {"functorially_finite": v.functorially_finite, "reason": r}


def quiver_json(q: Quiver) -> dict:
    return {
        "vertices": [arc_json(a) for a in sorted(q.vertices)],
        "arrows": [[arc_json(u), arc_json(v)] for u, v in q.arrows],
        "dot": to_dot(q),
    }
