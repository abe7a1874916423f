"""
Fold engine: the axioms behind a level gate, recorded into a Trace.

The level is an engine mode from config.levels. An axiom the level offers
runs directly; an axiom the level can derive (O1 and O4 at the reduced
level) runs through its derivation from O2, O3 and O5; anything else raises
AxiomNotAvailable.
"""

from __future__ import annotations

from origami_engine.config.levels import (
    AXIOM_LEVELS,
    DEFAULT_LEVEL,
    MACRO_REQUIREMENTS,
    allows,
    derivable,
)
from origami_engine.errors import AxiomNotAvailable, ConfigError, MissingAuxiliaryPoint
from origami_engine.folds import axioms
from origami_engine.folds.axioms import FoldResult
from origami_engine.folds.trace import Trace, pick_point
from origami_engine.geom import (
    Line,
    Point,
    incident,
    is_parallel,
    reflect_point,
    same_point,
)
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)


class FoldEngine:
    def __init__(self, level: str = DEFAULT_LEVEL, trace: Trace | None = None) -> None:
        if level not in AXIOM_LEVELS:
            raise ConfigError(f"unknown level {level!r}; choose from {sorted(AXIOM_LEVELS)}")
        self.level = level
        self.trace = trace if trace is not None else Trace()

    # -----------------------------
    # Gating
    # -----------------------------
    def _mode(self, axiom: str) -> str:
        if allows(self.level, axiom):
            return "direct"
        if derivable(self.level, axiom):
            return "derived"
        raise AxiomNotAvailable(f"{axiom} is not available at level {self.level!r}")

    def available(self, axiom: str) -> bool:
        return allows(self.level, axiom) or derivable(self.level, axiom)

    def require(self, *needed: str) -> None:
        missing = [a for a in needed if not self.available(a)]
        if missing:
            raise AxiomNotAvailable(
                f"{', '.join(missing)} not available at level {self.level!r}"
            )

    def require_macro(self, name: str) -> None:
        self.require(*MACRO_REQUIREMENTS[name])

    # -----------------------------
    # Givens
    # -----------------------------
    def given_point(self, p: Point, name: str | None = None) -> Point:
        if not self.trace.contains(p):
            self.trace.record("given", (), (p,))
        if name:
            self.trace.name(name, p)
        return p

    def given_line(self, l: Line, name: str | None = None) -> Line:
        if not self.trace.contains(l):
            self.trace.record("given", (), (l,))
        if name:
            self.trace.name(name, l)
        return l

    # -----------------------------
    # Axioms
    # -----------------------------
    def o1(self, p: Point, q: Point) -> Line:
        if self._mode("O1") == "derived":
            return self.derive_o1(p, q)
        line = axioms.o1(p, q)
        self.trace.record("O1", (p, q), (line,))
        return line

    def o2(self, l: Line, m: Line) -> Point:
        self._mode("O2")
        point = axioms.o2(l, m)
        self.trace.record("O2", (l, m), (point,))
        return point

    def o3(self, p: Point, q: Point) -> Line:
        self._mode("O3")
        line = axioms.o3(p, q)
        self.trace.record("O3", (p, q), (line,))
        return line

    def o4(self, l: Line, m: Line) -> FoldResult:
        if self._mode("O4") == "derived":
            return self.derive_o4(l, m)
        result = axioms.o4(l, m)
        self.trace.record("O4", (l, m), result.lines)
        return result

    def o5(self, p: Point, l: Line, q: Point) -> FoldResult:
        self._mode("O5")
        return self._o5(p, l, q, allow_incident=False)

    def _o5(self, p: Point, l: Line, q: Point, allow_incident: bool) -> FoldResult:
        result = axioms.o5(p, l, q, allow_incident=allow_incident)
        self.trace.record("O5", (p, l, q), result.lines)
        return result

    def o6(self, p: Point, l: Line, q: Point, m: Line) -> FoldResult:
        self._mode("O6")
        result = axioms.o6(p, l, q, m)
        self.trace.record("O6", (p, l, q, m), result.lines)
        return result

    def reflect(self, p: Point, f: Line) -> Point:
        """Where folding along f carries p."""
        image = reflect_point(p, f)
        self.trace.record("reflect", (p, f), (image,))
        return image

    def pick(self, l: Line, q: Point | None = None) -> Point:
        point = pick_point(l, q)
        self.trace.record("pick", (l,) if q is None else (l, q), (point,))
        return point

    # -----------------------------
    # Known points
    # -----------------------------
    def known_point_on(self, l: Line, *, exclude: tuple[Point, ...] = ()) -> Point | None:
        for p in self.trace.points():
            if any(same_point(p, e) for e in exclude):
                continue
            if incident(p, l):
                return p
        return None

    def known_point_off(self, l: Line) -> Point | None:
        for p in self.trace.points():
            if not incident(p, l):
                return p
        return None

    # -----------------------------
    # Derivations of O1 and O4
    # -----------------------------
    def derive_o1(self, p: Point, q: Point) -> Line:
        """The line through p and q from O3 and O5 alone."""
        self.require_macro("derive_o1")
        bisector = self.o3(p, q)
        first = self._o5(p, bisector, q, allow_incident=False).lines[0]
        through = self._o5(q, first, p, allow_incident=True)
        for fold in through.lines:
            if incident(q, fold):
                return fold
        raise AxiomNotAvailable("O1 derivation found no fold through both points")

    def derive_o4(self, l: Line, m: Line) -> FoldResult:
        """Angle bisectors of l and m from O2, O3 and O5 alone."""
        self.require_macro("derive_o4")
        if is_parallel(l, m):
            return self._derive_midline(l, m)
        apex = self.o2(l, m)
        p = self.known_point_on(l, exclude=(apex,)) or self.pick(l, apex)
        return self._o5(p, m, apex, allow_incident=False)

    def _derive_midline(self, l: Line, m: Line) -> FoldResult:
        p = self.known_point_on(l) or self.pick(l)
        r = self.known_point_on(m) or self.pick(m)
        centre = self.o2(self.o1(p, r), self.o3(p, r))
        for fold in self._o5(p, m, centre, allow_incident=False).lines:
            if is_parallel(fold, l):
                logger.debug("Derived midline through %s", centre)
                return FoldResult((fold,))
        raise MissingAuxiliaryPoint("no fold through the midpoint is parallel to the lines")
