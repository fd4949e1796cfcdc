"""Representation ring of Z/nZ and twisted K-groups of dual pairs.

The ring is Z[t]/(t^n - 1) with the basis t^0, ..., t^(n-1); products
are cyclic convolutions.  The twisted K-groups of the dual of a pair
over the isotropy point come out of a two-chart Mayer-Vietoris sequence
whose middle map is the 2x2 block matrix

    [  1    1 ]
    [ -P   -1 ]

with P the permutation induced by multiplication with the line-bundle
class t^(-q).  K^0 is the kernel and K^1 the cokernel, and the same
groups arise directly as kernel and cokernel of P - 1.

Everything here is computed over the plain (uncompleted) representation
ring.  For gcd(n, q) = 1 this reproduces the completed answers (Z, Z);
for gcd > 1 the outputs are algebraic values of the uncompleted operator
only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import FgAbGroup, IntMatrix, smith_normal_form
from .errors import ValidationError


@dataclass(frozen=True)
class RepRingElement:
    """Element of Z[t]/(t^n - 1); coeffs[i] is the coefficient of t^i."""

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValidationError(f"group order must be >= 1, got {self.n}")
        if len(self.coeffs) != self.n:
            raise ValidationError(f"expected {self.n} coefficients, got {len(self.coeffs)}")

    @classmethod
    def one(cls, n: int) -> "RepRingElement":
        return cls(n, (1,) + (0,) * (n - 1))

    @classmethod
    def line_class(cls, n: int, q: int) -> "RepRingElement":
        """The class t^(q mod n) of the line bundle attached to residue q."""
        coeffs = [0] * n
        coeffs[q % n] = 1
        return cls(n, tuple(coeffs))


def rep_multiply(a: RepRingElement, b: RepRingElement) -> RepRingElement:
    """Product in Z[t]/(t^n - 1) (cyclic convolution)."""
    if a.n != b.n:
        raise ValueError(f"mismatched ring orders {a.n} and {b.n}")
    n = a.n
    out = [0] * n
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    out[(i + j) % n] += x * y
    return RepRingElement(n, tuple(out))


def char_multiplication_matrix(n: int, q: int) -> IntMatrix:
    """Permutation matrix of multiplication by t^(q mod n): t^i -> t^(i+q)."""
    if n < 1:
        raise ValidationError(f"group order must be >= 1, got {n}")
    shift = q % n
    data = [[0] * n for _ in range(n)]
    for i in range(n):
        data[(i + shift) % n][i] = 1
    return IntMatrix.from_rows(data, cols=n)


def _kernel_and_cokernel(m: IntMatrix) -> tuple[FgAbGroup, FgAbGroup]:
    snf = smith_normal_form(m)
    diag = snf.diagonal()
    rank = sum(1 for x in diag if x != 0)
    k0 = FgAbGroup.free(m.cols - rank)
    k1 = FgAbGroup(m.rows - rank, tuple(d for d in diag if d > 1))
    return k0, k1


def borel_k_of_dual(n: int, q: int) -> tuple[FgAbGroup, FgAbGroup]:
    """(K^0, K^1) of the twisted dual pair: kernel and cokernel of the
    operator (t^(-q) - 1) on the representation ring lattice."""
    shift = char_multiplication_matrix(n, -q)
    op = IntMatrix.from_rows(
        [[shift.entries[i][j] - (1 if i == j else 0) for j in range(n)] for i in range(n)],
        cols=n,
    )
    return _kernel_and_cokernel(op)


def borel_k_via_mv(n: int, q: int) -> tuple[FgAbGroup, FgAbGroup]:
    """Same K-groups from the full 2n x 2n Mayer-Vietoris block matrix."""
    shift = char_multiplication_matrix(n, -q)
    data = []
    for i in range(n):
        row = [1 if i == j else 0 for j in range(n)]
        row += [1 if i == j else 0 for j in range(n)]
        data.append(row)
    for i in range(n):
        row = [-shift.entries[i][j] for j in range(n)]
        row += [-1 if i == j else 0 for j in range(n)]
        data.append(row)
    return _kernel_and_cokernel(IntMatrix.from_rows(data, cols=2 * n))


def k_untwisted_free_quotient() -> tuple[FgAbGroup, FgAbGroup]:
    """K-groups (Z, Z) of the circle carrying a trivializable twist."""
    return FgAbGroup.free(1), FgAbGroup.free(1)
