"""Pairs over Seifert-fibered 2-orbispaces.

The base is a closed oriented genus-g surface with r cone points of
orders n_1, ..., n_r.  Its degree-2 cohomology splits canonically as
Z + Z/n_1 + ... + Z/n_r, so a circle bundle is the data (e, chi_1, ...,
chi_r) and a degree-3 class on the total space pushes forward to
(f, a_1, ..., a_r) with each a_i annihilating chi_i.  These two tuples
classify the pair, and T-duality exchanges and negates them:

    (e, chi, f, a)  ->  (-f, -a, -e, -chi)

with residues normalized per cone point.

A bundle can also be given by construction data: a degree c at a marked
smooth point and boundary gluing degrees deg(phi_i) at the cone points.
The freely moving part e of its Chern class is the generator of the set
of solvable values of a one-variable divisibility system; it comes out
as lcm_i(n_i / gcd(n_i, deg phi_i)) * (c + sum_i deg(phi_i) / n_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .abelian import FgAbGroup
from .errors import ValidationError


@dataclass(frozen=True)
class SeifertBase:
    """Genus g surface with cone points of the given orders (all >= 1)."""

    genus: int
    cone_orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValidationError(f"genus must be >= 0, got {self.genus}")
        for n in self.cone_orders:
            if n < 1:
                raise ValidationError(f"cone orders must be >= 1, got {n}")

    @property
    def r(self) -> int:
        return len(self.cone_orders)


@dataclass(frozen=True)
class SeifertPair:
    """Bundle invariants (e, chi) and class invariants (f, a) over a base.

    Construction does not validate; see :func:`validate_seifert`.
    """

    base: SeifertBase
    e: int
    chi: tuple[int, ...]
    f: int
    a: tuple[int, ...]


@dataclass(frozen=True)
class SeifertConstruction:
    """Gluing data for a bundle: degree c at the marked smooth point and
    boundary degrees deg(phi_i), one per cone point."""

    base: SeifertBase
    c: int
    phi_degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.phi_degrees) != self.base.r:
            raise ValidationError(
                f"expected {self.base.r} boundary degrees, got {len(self.phi_degrees)}"
            )


def cohomology_base(base: SeifertBase, degree: int) -> FgAbGroup:
    """Integer cohomology of the orbifold base.

    Degrees 0..2 give Z, Z^2g, Z + sum Z/n_i; higher odd degrees vanish
    and higher even degrees repeat the torsion sum.
    """
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    if degree == 0:
        return FgAbGroup.free(1)
    if degree == 1:
        return FgAbGroup.free(2 * base.genus)
    if degree == 2:
        return FgAbGroup.from_cyclic_orders(base.cone_orders, free_rank=1)
    if degree % 2 == 1:
        return FgAbGroup.trivial()
    return FgAbGroup.from_cyclic_orders(base.cone_orders)


def check_seifert(pair: SeifertPair) -> None:
    """Raise ValidationError naming the first violated constraint."""
    base = pair.base
    if len(pair.chi) != base.r:
        raise ValidationError(f"expected {base.r} chi residues, got {len(pair.chi)}")
    if len(pair.a) != base.r:
        raise ValidationError(f"expected {base.r} a residues, got {len(pair.a)}")
    for i, (n, chi, a) in enumerate(zip(base.cone_orders, pair.chi, pair.a)):
        if not 0 <= chi < n:
            raise ValidationError(f"chi[{i}]={chi} outside residue range 0..{n - 1}")
        if not 0 <= a < n:
            raise ValidationError(f"a[{i}]={a} outside residue range 0..{n - 1}")
        if (a * chi) % n != 0:
            raise ValidationError(
                f"a[{i}] not in Ann(chi[{i}]): {n} does not divide {a * chi}"
            )


def validate_seifert(pair: SeifertPair) -> bool:
    """True iff lengths, residue ranges, and all n_i | a_i*chi_i hold."""
    try:
        check_seifert(pair)
    except ValidationError:
        return False
    return True


def h3_total(pair: SeifertPair) -> FgAbGroup:
    """Degree-3 cohomology of the total space: Z plus, per cone point,
    the annihilator of chi_i, cyclic of order gcd(n_i, chi_i)."""
    check_seifert(pair)
    orders = [gcd(n, chi) for n, chi in zip(pair.base.cone_orders, pair.chi)]
    return FgAbGroup.from_cyclic_orders(orders, free_rank=1)


def classification_invariants(
    pair: SeifertPair,
) -> tuple[tuple[int, tuple[int, ...]], tuple[int, tuple[int, ...]]]:
    """Chern class and pushforward in split coordinates; complete
    isomorphism invariants of the pair."""
    check_seifert(pair)
    return (pair.e, pair.chi), (pair.f, pair.a)


def tdualize_seifert(pair: SeifertPair) -> SeifertPair:
    """The dual pair (-f, (-a_i), -e, (-chi_i)) over the same base."""
    check_seifert(pair)
    orders = pair.base.cone_orders
    return SeifertPair(
        base=pair.base,
        e=-pair.f,
        chi=tuple((-a) % n for n, a in zip(orders, pair.a)),
        f=-pair.e,
        a=tuple((-chi) % n for n, chi in zip(orders, pair.chi)),
    )


def degree_sum(con: SeifertConstruction) -> Fraction:
    """c + sum_i deg(phi_i)/n_i, exactly."""
    total = Fraction(con.c)
    for n, d in zip(con.base.cone_orders, con.phi_degrees):
        total += Fraction(d, n)
    return total


def chern_from_construction(con: SeifertConstruction) -> tuple[int, tuple[int, ...]]:
    """Chern class (e, (chi_i)) of the constructed bundle.

    chi_i is deg(phi_i) mod n_i.  e generates the subgroup of values b
    for which b = x * (c + sum deg(phi_i)/n_i) admits an integer x with
    n_i | x * deg(phi_i) for every i; the sign follows the generator
    lcm_i(n_i/gcd(n_i, deg phi_i)) * degree_sum.  A vanishing degree sum
    collapses the subgroup to 0 and e = 0 is returned.
    """
    orders = con.base.cone_orders
    chi = tuple(d % n for n, d in zip(orders, con.phi_degrees))
    scale = 1
    for n, d in zip(orders, con.phi_degrees):
        scale = lcm(scale, n // gcd(n, d))
    e = scale * degree_sum(con)
    if e.denominator != 1:
        raise AssertionError("kernel generator is not integral")
    return int(e), chi
