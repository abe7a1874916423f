"""
Declarative contract for the fold engine's axiom levels.

Each level is an engine mode: the set of fold axioms a construction may use
and the number field that set reaches, starting from the points 0 and 1.

Notes:
- Axioms are named "O1".."O6"; axiom (0) (the given points) is always allowed.
- "reduced" is the small basis {O2, O3, O5, O6}. O1 and O4 are still usable
  at that level because DERIVED_AXIOMS lists how to rebuild them; the engine
  executes the derivation instead of the axiom.
- MACRO_REQUIREMENTS lists the axioms a macro needs before derivations are
  taken into account.
- EXIT_CODES is shared by the CLI and the corpus report.
"""

from __future__ import annotations

AXIOM_LEVELS: dict[str, dict] = {
    # -----------------------------
    # The field hierarchy
    # -----------------------------
    "thalian": {
        "axioms": ("O1", "O2", "O3"),
        "field": "Thalian numbers",
        "description": "Lines through points, intersections, perpendicular bisectors.",
    },
    "pythagorean": {
        "axioms": ("O1", "O2", "O3", "O4"),
        "field": "Pythagorean numbers",
        "description": "Adds angle bisection; closed under sqrt(1 + x^2).",
    },
    "euclidean": {
        "axioms": ("O1", "O2", "O3", "O4", "O5"),
        "field": "Euclidean numbers",
        "description": "Adds folding a point onto a line through a point; closed under sqrt.",
    },
    "origami": {
        "axioms": ("O1", "O2", "O3", "O4", "O5", "O6"),
        "field": "origami numbers",
        "description": "Adds the simultaneous two-point fold; closed under sqrt and cbrt.",
    },
    # -----------------------------
    # Reduced basis
    # -----------------------------
    "reduced": {
        "axioms": ("O2", "O3", "O5", "O6"),
        "field": "origami numbers",
        "description": "Minimal basis; O1 and O4 are derived from O2, O3 and O5.",
    },
}

DEFAULT_LEVEL = "origami"

DERIVED_AXIOMS: dict[str, tuple[str, ...]] = {
    "O1": ("O3", "O5"),
    "O4": ("O2", "O3", "O5"),
}

MACRO_REQUIREMENTS: dict[str, tuple[str, ...]] = {
    "translate": ("O1", "O2", "O3"),
    "scale": ("O1", "O2", "O3"),
    "midpoint": ("O1", "O2", "O3"),
    "reflect": (),
    "perpendicular": ("O1", "O2", "O3"),
    "reciprocal": ("O1", "O2", "O3"),
    "complex_square": ("O1", "O2", "O3"),
    "complex_product": ("O1", "O2", "O3"),
    "complex_inverse": ("O1", "O2", "O3"),
    "marklen": ("O1", "O2", "O3", "O4"),
    "derive_o1": ("O3", "O5"),
    "derive_o4": ("O2", "O3", "O5"),
}

EXIT_CODES: dict[str, int] = {
    "ok": 0,
    "parse": 2,
    "eval": 3,
    "assert": 4,
    "precision": 5,
    "usage": 64,
}


def level_names() -> list[str]:
    return list(AXIOM_LEVELS)


def allows(level: str, axiom: str) -> bool:
    """True when the level offers the axiom directly."""
    return axiom in AXIOM_LEVELS[level]["axioms"]


def derivable(level: str, axiom: str) -> bool:
    """True when the level lacks the axiom but holds everything its derivation needs."""
    if allows(level, axiom):
        return False
    needed = DERIVED_AXIOMS.get(axiom)
    return needed is not None and all(allows(level, a) for a in needed)
