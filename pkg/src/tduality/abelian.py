"""Exact integer linear algebra and finitely generated abelian groups.

Matrices are dense, immutable, and hold plain Python ints, so every
computation here is exact at arbitrary precision.  Smith normal form is
the single workhorse: cokernels, kernels, and integral linear solves are
all derived from one decomposition U*M*V = D with U, V unimodular and D
diagonal with a divisibility chain.

Every cohomology group computed elsewhere in the package is reported as
an :class:`FgAbGroup` in canonical invariant-factor form, so equality of
values is isomorphism of groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Dense integer matrix; ``entries[i][j]`` sits in row i, column j.

    Zero rows or columns are legal and mean zero maps: an r x 0 matrix
    presents the zero map into Z^r.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match declared shape")
        if any(len(row) != self.cols for row in self.entries):
            raise ValueError("column count does not match declared shape")

    @classmethod
    def from_rows(cls, rows_data: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        """Build from a list of rows; ``cols`` disambiguates the empty case."""
        data = tuple(tuple(int(x) for x in row) for row in rows_data)
        nrows = len(data)
        if nrows:
            ncols = len(data[0])
        else:
            ncols = 0 if cols is None else cols
        return cls(nrows, ncols, data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        ot = other.entries
        data = []
        for row in self.entries:
            out = [0] * other.cols
            for k, x in enumerate(row):
                if x:
                    orow = ot[k]
                    for j in range(other.cols):
                        out[j] += x * orow[j]
            data.append(tuple(out))
        return IntMatrix(self.rows, other.cols, tuple(data))

    def mul_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(x * y for x, y in zip(row, v)) for row in self.entries)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)


@dataclass(frozen=True)
class FgAbGroup:
    """Finitely generated abelian group in canonical form.

    ``free_rank`` copies of Z plus cyclic factors Z/d_1 + ... + Z/d_k
    where each d_i >= 2 and d_i | d_(i+1).  Two values compare equal iff
    the groups are isomorphic.

    >>> FgAbGroup.cyclic(1) == FgAbGroup.trivial()
    True
    >>> FgAbGroup.from_cyclic_orders([4, 6]).torsion
    (2, 12)
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        prev = None
        for d in self.torsion:
            if d < 2:
                raise ValueError("torsion invariant factors must be >= 2")
            if prev is not None and d % prev != 0:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = d

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n: int) -> "FgAbGroup":
        """Z/nZ; n = 1 collapses to the trivial group."""
        if n < 1:
            raise ValueError("cyclic order must be >= 1")
        return cls(0, ()) if n == 1 else cls(0, (n,))

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int], free_rank: int = 0) -> "FgAbGroup":
        """Canonicalize a direct sum of cyclic groups of the given orders."""
        orders = [int(n) for n in orders]
        if any(n < 1 for n in orders):
            raise ValueError("cyclic orders must be >= 1")
        diag = IntMatrix.from_rows(
            [[orders[i] if i == j else 0 for j in range(len(orders))] for i in range(len(orders))],
            cols=len(orders),
        )
        body = cokernel(diag)
        return cls(free_rank, body.torsion)

    def direct_sum(self, other: "FgAbGroup") -> "FgAbGroup":
        return FgAbGroup.from_cyclic_orders(
            self.torsion + other.torsion, self.free_rank + other.free_rank
        )

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> Optional[int]:
        """Number of elements, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def describe(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class SnfDecomposition:
    """Smith normal form U*M*V = D.

    U and V are unimodular; D is diagonal (up to rectangular padding)
    with nonnegative entries, each dividing the next, zeros last.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        k = min(self.d.rows, self.d.cols)
        return tuple(self.d.entries[i][i] for i in range(k))

    def rank(self) -> int:
        return sum(1 for x in self.diagonal() if x != 0)


def _min_abs_entry(a: list[list[int]], t: int, nrows: int, ncols: int) -> Optional[tuple[int, int]]:
    best = None
    best_val = None
    for i in range(t, nrows):
        row = a[i]
        for j in range(t, ncols):
            x = row[j]
            if x:
                v = x if x > 0 else -x
                if best_val is None or v < best_val:
                    best, best_val = (i, j), v
                    if v == 1:
                        return best
    return best


def _nearest_quotient(x: int, p: int) -> int:
    # p > 0; remainder x - q*p lands in [-p/2, p/2]
    return (x + (p >> 1)) // p


def smith_normal_form(m: IntMatrix) -> SnfDecomposition:
    """Smith normal form with minimal-absolute-value pivoting.

    Total function: empty and zero matrices are fine.  The diagonal of D
    lists the invariant factors of the cokernel presented by m.
    """
    nrows, ncols = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]
    v = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j: int, k: int) -> None:
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def row_addmul(i: int, src: int, q: int) -> None:
        a[i] = [x + q * y for x, y in zip(a[i], a[src])]
        u[i] = [x + q * y for x, y in zip(u[i], u[src])]

    def col_addmul(j: int, src: int, q: int) -> None:
        for row in a:
            row[j] += q * row[src]
        for row in v:
            row[j] += q * row[src]

    for t in range(min(nrows, ncols)):
        while True:
            pos = _min_abs_entry(a, t, nrows, ncols)
            if pos is None:
                break
            swap_rows(t, pos[0])
            swap_cols(t, pos[1])
            if a[t][t] < 0:
                negate_row(t)
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if a[i][t]:
                    row_addmul(i, t, -_nearest_quotient(a[i][t], p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, ncols):
                if a[t][j]:
                    col_addmul(j, t, -_nearest_quotient(a[t][j], p))
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            # Pivot must divide the whole trailing block so the diagonal
            # forms a chain; folding an offending row in shrinks the pivot
            # on the next pass.
            offender = None
            for i in range(t + 1, nrows):
                row = a[i]
                for j in range(t + 1, ncols):
                    if row[j] % p:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_addmul(t, offender, 1)
        if pos is None:
            break

    return SnfDecomposition(
        u=IntMatrix.from_rows(u, cols=nrows),
        d=IntMatrix.from_rows(a, cols=ncols),
        v=IntMatrix.from_rows(v, cols=ncols),
    )


def cokernel(m: IntMatrix) -> FgAbGroup:
    """Z^rows / (column span of m), in canonical form.

    >>> cokernel(IntMatrix.from_rows([[2, 4], [6, 8]])).describe()
    'Z/2 x Z/4'
    """
    diag = smith_normal_form(m).diagonal()
    rank = sum(1 for x in diag if x != 0)
    return FgAbGroup(m.rows - rank, tuple(d for d in diag if d > 1))


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Columns form a Z-basis of ker(m); the lattice they span is saturated."""
    snf = smith_normal_form(m)
    rank = snf.rank()
    data = tuple(tuple(row[j] for j in range(rank, m.cols)) for row in snf.v.entries)
    return IntMatrix(m.cols, m.cols - rank, data)


def solve_integral(m: IntMatrix, b: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Some x with m*x = b over Z, or None when no integral solution exists."""
    b = tuple(int(x) for x in b)
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    snf = smith_normal_form(m)
    c = snf.u.mul_vec(b)
    diag = snf.diagonal()
    y = [0] * m.cols
    for i in range(m.rows):
        d = diag[i] if i < len(diag) else 0
        if d == 0:
            if c[i] != 0:
                return None
        else:
            q, r = divmod(c[i], d)
            if r:
                return None
            y[i] = q
    x = snf.v.mul_vec(y)
    if m.mul_vec(x) != b:
        raise AssertionError("substitution check failed")
    return x


def groups_isomorphic(a: FgAbGroup, b: FgAbGroup) -> bool:
    """True iff the canonical forms coincide."""
    return a == b


def kernel_mod_image(outgoing: IntMatrix, incoming: IntMatrix) -> FgAbGroup:
    """ker(outgoing) / im(incoming) at the middle term of a complex.

    ``incoming`` maps into the same module ``outgoing`` maps out of, and
    its image must land inside the kernel (the complex condition).
    """
    if incoming.rows != outgoing.cols:
        raise ValueError("incoming target does not match outgoing source")
    basis = kernel_basis(outgoing)
    coords = []
    for j in range(incoming.cols):
        x = solve_integral(basis, incoming.column(j))
        if x is None:
            raise ValueError("image is not contained in the kernel")
        coords.append(x)
    presentation = IntMatrix(
        basis.cols,
        incoming.cols,
        tuple(tuple(coords[j][i] for j in range(incoming.cols)) for i in range(basis.cols)),
    )
    return cokernel(presentation)
