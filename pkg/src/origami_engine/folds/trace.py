"""
Construction trace: an append-only record of fold steps.

Objects (points and lines) are registered by identity and receive small
integer ids in order of first appearance. Each step names an op, the ids it
read and the ids it produced, so every referenced id precedes its use.

Notes:
- ops: given, O1..O6, reflect (where a fold carries a point) and pick (an
  arbitrary point on a constructed line: a step away from a known point of
  it, or the first point of its equation when none is known).
- to_json() stores exact expression strings plus decimal approximations;
  it contains no timestamps, so equal constructions serialize identically.
- replay() re-executes every step from the given objects.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from typing import Any, Union

from origami_engine.config.settings import get_settings
from origami_engine.errors import ReplayMismatch
from origami_engine.exactnum import add, to_decimal, to_expr_string
from origami_engine.folds import axioms
from origami_engine.geom import Line, Point, points_on, reflect_point
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)

TraceObject = Union[Point, Line]


@dataclass(frozen=True)
class TraceStep:
    op: str
    args: tuple[int, ...]
    out: tuple[int, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"op": self.op, "args": list(self.args), "out": list(self.out)}


def pick_point(l: Line, q: Point | None = None) -> Point:
    """A point of l, one direction step away from q (q on l), or points_on(l)[0]."""
    if q is None:
        return points_on(l)[0]
    dx, dy = l.direction()
    return Point(add(q.x, dx), add(q.y, dy))


class Trace:
    def __init__(self) -> None:
        self.steps: list[TraceStep] = []
        self.objects: dict[int, TraceObject] = {}
        self.names: dict[str, int] = {}
        self._ids: dict[int, int] = {}

    # -----------------------------
    # Recording
    # -----------------------------
    def register(self, obj: TraceObject) -> int:
        key = id(obj)
        if key not in self._ids:
            new_id = len(self.objects)
            self._ids[key] = new_id
            self.objects[new_id] = obj
        return self._ids[key]

    def id_of(self, obj: TraceObject) -> int:
        return self._ids[id(obj)]

    def contains(self, obj: TraceObject) -> bool:
        return id(obj) in self._ids

    def record(self, op: str, args: Sequence[TraceObject], out: Sequence[TraceObject]) -> TraceStep:
        arg_ids = tuple(self.id_of(a) if self.contains(a) else self._given(a) for a in args)
        out_ids = tuple(self.register(o) for o in out)
        step = TraceStep(op, arg_ids, out_ids)
        self.steps.append(step)
        logger.debug("Step %d: %s %s -> %s", len(self.steps), op, arg_ids, out_ids)
        return step

    def _given(self, obj: TraceObject) -> int:
        self.record("given", (), (obj,))
        return self.id_of(obj)

    def name(self, name: str, obj: TraceObject) -> None:
        if not self.contains(obj):
            self._given(obj)
        self.names[name] = self.id_of(obj)

    def points(self) -> Iterator[Point]:
        return (o for o in self.objects.values() if isinstance(o, Point))

    def lines(self) -> Iterator[Line]:
        return (o for o in self.objects.values() if isinstance(o, Line))

    def count(self, op: str) -> int:
        return sum(1 for s in self.steps if s.op == op)

    # -----------------------------
    # Export
    # -----------------------------
    def to_json(self, digits: int | None = None) -> dict[str, Any]:
        digits = digits if digits is not None else get_settings().trace_digits
        objects = {}
        for obj_id, obj in self.objects.items():
            if isinstance(obj, Point):
                coords = {"x": obj.x, "y": obj.y}
                kind = "point"
            else:
                coords = {"a": obj.a, "b": obj.b, "c": obj.c}
                kind = "line"
            objects[str(obj_id)] = {
                "kind": kind,
                "exact": {k: to_expr_string(v) for k, v in coords.items()},
                "approx": {k: to_decimal(v, digits) for k, v in coords.items()},
            }
        return {
            "steps": [step.to_dict() for step in self.steps],
            "objects": objects,
            "names": dict(sorted(self.names.items())),
        }


# -----------------------------
# Replay
# -----------------------------
_Replayer = Callable[..., list[TraceObject]]

_REPLAY: dict[str, _Replayer] = {
    "O1": lambda p, q: [axioms.o1(p, q)],
    "O2": lambda l, m: [axioms.o2(l, m)],
    "O3": lambda p, q: [axioms.o3(p, q)],
    "O4": lambda l, m: list(axioms.o4(l, m).lines),
    "O5": lambda p, l, q: list(axioms.o5(p, l, q, allow_incident=True).lines),
    "O6": lambda p, l, q, m: list(axioms.o6(p, l, q, m).lines),
    "reflect": lambda p, f: [reflect_point(p, f)],
    "pick": lambda l, q=None: [pick_point(l, q)],
}


def replay(trace: Trace) -> Trace:
    """Re-execute every step; the result serializes exactly like the input."""
    fresh = Trace()
    rebuilt: dict[int, TraceObject] = {}
    for index, step in enumerate(trace.steps, start=1):
        if step.op == "given":
            outputs = [trace.objects[i] for i in step.out]
            args: list[TraceObject] = []
        else:
            if step.op not in _REPLAY:
                raise ReplayMismatch(f"step {index}: unknown op {step.op!r}")
            args = [rebuilt[i] for i in step.args]
            outputs = _REPLAY[step.op](*args)
        if len(outputs) != len(step.out):
            raise ReplayMismatch(
                f"step {index}: {step.op} produced {len(outputs)} objects, expected {len(step.out)}"
            )
        fresh.record(step.op, args, outputs)
        for old_id, obj in zip(step.out, outputs):
            rebuilt[old_id] = obj
    for name, old_id in trace.names.items():
        fresh.name(name, rebuilt[old_id])
    return fresh
