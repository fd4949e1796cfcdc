"""Pairs over a point with cyclic isotropy Z/nZ.

A pair is a circle bundle together with a degree-3 integer class on its
total space.  Over the isotropy point both are discrete data: the bundle
is classified by a character residue q, and the degree-3 group of the
total space is the subgroup {[s] : n | s*q} of Z/nZ computed from the
Gysin sequence.  T-duality exchanges and negates the two residues.

All residues are normalized into {0, ..., n-1}; negation is (n - x) mod n.

>>> tdualize_gamma_point(GammaPointPair(12, 4, 3))
GammaPointPair(n=12, q=9, s=8)
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .abelian import FgAbGroup
from .errors import ValidationError


@dataclass(frozen=True)
class GammaPointPair:
    """(n, q, s): isotropy order, bundle residue, degree-3 class residue.

    Construction does not validate; see :func:`validate_gamma_point`.
    """

    n: int
    q: int
    s: int


def _check_order_residue(n: int, value: int, name: str) -> None:
    if n < 1:
        raise ValidationError(f"group order must be >= 1, got {n}")
    if not 0 <= value < n:
        raise ValidationError(f"{name}={value} outside residue range 0..{n - 1}")


def check_gamma_point(pair: GammaPointPair) -> None:
    """Raise ValidationError naming the first violated constraint."""
    _check_order_residue(pair.n, pair.q, "q")
    _check_order_residue(pair.n, pair.s, "s")
    if (pair.s * pair.q) % pair.n != 0:
        raise ValidationError(f"h not in H3: {pair.n} does not divide {pair.s * pair.q}")


def validate_gamma_point(pair: GammaPointPair) -> bool:
    """True iff ranges hold and n divides s*q."""
    try:
        check_gamma_point(pair)
    except ValidationError:
        return False
    return True


def h3_total_space(n: int, q: int) -> FgAbGroup:
    """Degree-3 cohomology of the total space of the bundle with residue q.

    The Gysin kernel {[s] : n | s*q} is cyclic of order gcd(n, q), with
    gcd(n, 0) = n covering the trivial bundle.
    """
    _check_order_residue(n, q, "q")
    return FgAbGroup.cyclic(gcd(n, q))


def h3_generator(n: int, q: int) -> int:
    """Generator [n / gcd(n, q)] of the subgroup {[s] : n | s*q}."""
    _check_order_residue(n, q, "q")
    return (n // gcd(n, q)) % n


def thom_exists(n: int, q0: int, q1: int) -> bool:
    """Whether the 3-sphere bundle joining the two line bundles admits a
    Thom class: the cup product of the Chern classes must vanish, which
    on the isotropy point is the residue product n | q0*q1."""
    if n < 1:
        raise ValidationError(f"group order must be >= 1, got {n}")
    return (q0 * q1) % n == 0


def tdualize_gamma_point(pair: GammaPointPair) -> GammaPointPair:
    """The dual pair (n, -s mod n, -q mod n).  Involutive on valid pairs."""
    check_gamma_point(pair)
    n = pair.n
    return GammaPointPair(n, (-pair.s) % n, (-pair.q) % n)
