"""
Regular n-gons constructible by folding.

n qualifies when n = 2^a 3^b P1 ... Ps with distinct primes Pi > 3, each
of the form 2^c 3^d + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from origami_engine.errors import OutOfRange
from origami_engine.fields.primes import factorize, format_factors, is_pierpont_prime
from origami_engine.utils.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class NgonVerdict:
    n: int
    constructible: bool
    factors: tuple[tuple[int, int], ...]
    reason: str

    def __str__(self) -> str:
        head = "constructible" if self.constructible else "not constructible"
        return f"{head}: {self.reason}"


def ngon_constructible(n: int, bound: int | None = None) -> NgonVerdict:
    if n < 3:  # noqa: PLR2004
        raise OutOfRange(f"a polygon needs at least 3 sides, got {n}")
    factors = tuple(factorize(n, bound))
    for p, e in factors:
        if p <= 3:  # noqa: PLR2004
            continue
        if e > 1:
            return NgonVerdict(n, False, factors, f"{n} = {format_factors(list(factors))}, prime {p} repeated")
        if not is_pierpont_prime(p):
            rest = factorize(p - 1, bound)
            return NgonVerdict(n, False, factors, f"{p} − 1 = {format_factors(rest)}")
    logger.debug("ngon %d factors as %s", n, format_factors(list(factors)))
    return NgonVerdict(n, True, factors, f"{n} = {format_factors(list(factors))}")
