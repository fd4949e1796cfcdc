"""Integer cohomology of the classifying space of a finite cyclic group.

Two independent routes are provided.  The closed form alternates
Z, 0, Z/n, 0, Z/n, ... in degrees 0, 1, 2, 3, 4, ...  The cross-check
builds the inhomogeneous bar complex of the one-object groupoid with
n morphisms and trivial integer coefficients, then takes kernels modulo
images by Smith normal form.  Bar matrices grow as n^degree, so the
cross-check refuses sizes beyond a fixed guard.

Characters of the group are identified with residues: the character
sending the standard generator to exp(2*pi*i*q/n) corresponds to [q],
and under that identification it equals the first Chern class of the
associated circle bundle over the classifying space.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .abelian import FgAbGroup, IntMatrix, kernel_mod_image
from .errors import SizeGuardError, ValidationError


@dataclass(frozen=True)
class CyclicGroup:
    """Cyclic group of order n >= 1."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError(f"group order must be >= 1, got {self.n}")


@dataclass(frozen=True)
class Character:
    """Character of Z/nZ, stored as the residue q with 0 <= q < n."""

    n: int
    q: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError(f"group order must be >= 1, got {self.n}")
        if not 0 <= self.q < self.n:
            raise ValidationError(f"character residue {self.q} outside 0..{self.n - 1}")


def cohomology_bgamma(group: CyclicGroup, degree: int) -> FgAbGroup:
    """H^degree of the classifying space with integer coefficients.

    Degree 0 gives Z, odd degrees vanish, positive even degrees give
    Z/nZ (which collapses for n = 1).
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return FgAbGroup.free(1)
    if degree % 2 == 1:
        return FgAbGroup.trivial()
    return FgAbGroup.cyclic(group.n)


def bar_tuple_index(tau: tuple[int, ...], n: int) -> int:
    """Position of a tuple in the lexicographic basis ordering."""
    idx = 0
    for g in tau:
        idx = idx * n + g
    return idx


def bar_row_terms(n: int, tau: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Coefficients of the bar differential evaluated on one basis row.

    For a (p+1)-tuple tau, returns the source p-tuples with their signed
    multiplicities: drop the first entry, fold consecutive entries
    together with alternating signs, drop the last entry with sign
    (-1)^(p+1).  Coefficients act trivially, so no group action appears.
    """
    p = len(tau) - 1
    terms: dict[tuple[int, ...], int] = {}

    def add(key: tuple[int, ...], coeff: int) -> None:
        new = terms.get(key, 0) + coeff
        if new:
            terms[key] = new
        else:
            terms.pop(key, None)

    add(tau[1:], 1)
    for i in range(1, p + 1):
        folded = tau[: i - 1] + (((tau[i - 1] + tau[i]) % n),) + tau[i + 1 :]
        add(folded, -1 if i % 2 else 1)
    add(tau[:p], -1 if (p + 1) % 2 else 1)
    return terms


def bar_cochain_differential(group: CyclicGroup, p: int) -> IntMatrix:
    """Matrix of the degree-p bar differential, n^(p+1) rows by n^p columns.

    Basis vectors are indicator functions of tuples, ordered
    lexicographically.
    """
    if p < 0:
        raise ValueError("cochain degree must be nonnegative")
    n = group.n
    rows = n ** (p + 1)
    cols = n**p
    data = [[0] * cols for _ in range(rows)]
    for row_idx, tau in enumerate(product(range(n), repeat=p + 1)):
        row = data[row_idx]
        for key, coeff in bar_row_terms(n, tau).items():
            row[bar_tuple_index(key, n)] += coeff
    return IntMatrix.from_rows(data, cols=cols)


def _check_oracle_guard(n: int, degree: int) -> None:
    if (n <= 4 and degree <= 3) or (n <= 3 and degree <= 4):
        return
    raise SizeGuardError(
        f"bar-complex cross-check refused for n={n}, degree={degree}; "
        "allowed: n <= 4 with degree <= 3, or n <= 3 with degree <= 4"
    )


def cohomology_bgamma_oracle(group: CyclicGroup, degree: int) -> FgAbGroup:
    """Recompute H^degree from the bar complex.  Guarded by matrix size."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    _check_oracle_guard(group.n, degree)
    outgoing = bar_cochain_differential(group, degree)
    if degree == 0:
        incoming = IntMatrix(1, 0, ((),))
    else:
        incoming = bar_cochain_differential(group, degree - 1)
    return kernel_mod_image(outgoing, incoming)


def character_to_chern(chi: Character) -> int:
    """First Chern class of the bundle attached to a character.

    The connecting isomorphism from degree-1 circle-valued cohomology to
    degree-2 integer cohomology sends the character [q] to the residue
    [q]; this fixes the identification used everywhere else.
    """
    return chi.q
