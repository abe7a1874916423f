"""
Primality and factorization for the polygon criterion.

Both defer to sympy; factorize() only adds the configured size bound.
"""

from __future__ import annotations

import sympy

from origami_engine.config.settings import get_settings
from origami_engine.errors import OutOfRange


def is_prime(n: int) -> bool:
    return bool(sympy.isprime(n))


def factorize(n: int, bound: int | None = None) -> list[tuple[int, int]]:
    """Prime factorization [(p, e), ...], ascending."""
    bound = bound if bound is not None else get_settings().ngon_bound
    if n < 1:
        raise OutOfRange(f"cannot factor {n}")
    if n > bound:
        raise OutOfRange(f"{n} is beyond the factoring bound {bound}")
    return sorted((int(p), int(e)) for p, e in sympy.factorint(n).items())


def is_smooth_23(n: int) -> bool:
    """True when n = 2^a 3^b."""
    if n < 1:
        return False
    return set(sympy.factorint(n)) <= {2, 3}


def is_pierpont_prime(p: int) -> bool:
    """A prime of the form 2^a 3^b + 1."""
    return is_prime(p) and is_smooth_23(p - 1)


def format_factors(factors: list[tuple[int, int]]) -> str:
    if not factors:
        return "1"
    return "·".join(str(p) if e == 1 else f"{p}^{e}" for p, e in factors)
