"""Exact integer linear algebra.

Hermite and Smith normal forms with unimodular transform certificates,
saturated integer kernel bases, cokernel invariant factors, and integer
linear-system solving.  Everything runs on Python's arbitrary-precision
integers; intermediate entries in normal-form computations routinely
outgrow machine words, so no fixed-width arithmetic is used anywhere.

Pivot selection is deterministic: smallest nonzero absolute value, ties
broken by lowest (row, col) index.  Empty matrices (0 rows or 0 columns)
are legal throughout and yield identity certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import InternalInvariantError


class DimensionError(ValueError):
    """Operand shapes are incompatible."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix; entries stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, data: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        data = list(data)
        if not data:
            return cls(0, cols if cols is not None else 0, ())
        width = len(data[0]) if cols is None else cols
        flat = []
        for r in data:
            if len(r) != width:
                raise DimensionError("ragged rows")
            flat.extend(int(x) for x in r)
        return cls(len(data), width, tuple(flat))

    @classmethod
    def from_columns(cls, data: Sequence[Sequence[int]], rows: Optional[int] = None) -> "IntMatrix":
        data = list(data)
        if not data:
            return cls(rows if rows is not None else 0, 0, ())
        height = len(data[0]) if rows is None else rows
        for c in data:
            if len(c) != height:
                raise DimensionError("ragged columns")
        flat = [int(data[j][i]) for i in range(height) for j in range(len(data))]
        return cls(height, len(data), tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def at(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise DimensionError(f"index ({i},{j}) out of range for {self.rows}x{self.cols}")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> list:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_lists(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        flat = tuple(
            self.entries[i * self.cols + j]
            for j in range(self.cols)
            for i in range(self.rows)
        )
        return IntMatrix(self.cols, self.rows, flat)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            for j in range(other.cols):
                out.append(
                    sum(
                        self.entries[base + k] * other.entries[k * other.cols + j]
                        for k in range(self.cols)
                    )
                )
        return IntMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vector: Sequence[int]) -> list:
        """Matrix-vector product self @ vector."""
        if len(vector) != self.cols:
            raise DimensionError(f"vector length {len(vector)} != cols {self.cols}")
        return [
            sum(self.entries[i * self.cols + k] * vector[k] for k in range(self.cols))
            for i in range(self.rows)
        ]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def diagonal(self) -> list:
        return [self.at(i, i) for i in range(min(self.rows, self.cols))]

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows)) + "]"


@dataclass(frozen=True)
class FgAbelianGroup:
    """Finitely generated abelian group in invariant-factor form.

    ``rank`` is the free rank and ``torsion`` the invariant factors > 1 in
    ascending divisibility order, so two values are equal exactly when the
    groups are isomorphic.
    """

    rank: int
    torsion: tuple = ()

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        for k, d in enumerate(self.torsion):
            if d <= 1:
                raise ValueError("torsion entries must exceed 1")
            if k > 0 and d % self.torsion[k - 1] != 0:
                raise ValueError("torsion entries must form a divisibility chain")

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def describe(self) -> str:
        """Render as "0", "Z", "Z^r", or "Z^r + Z/d1 + Z/d2"."""
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.describe()


@dataclass(frozen=True)
class SmithCertificate:
    """Witnessed Smith normal form: u @ a @ v == d with u, v unimodular."""

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix

    def diagonal(self) -> list:
        return self.d.diagonal()

    def invariant_factors(self) -> list:
        return [x for x in self.diagonal() if x != 0]

    def holds_for(self, a: IntMatrix) -> bool:
        if self.u.rows != a.rows or self.u.cols != a.rows:
            return False
        if self.v.rows != a.cols or self.v.cols != a.cols:
            return False
        if self.d.rows != a.rows or self.d.cols != a.cols:
            return False
        if (self.u @ a) @ self.v != self.d:
            return False
        if abs(det(self.u)) != 1 or abs(det(self.v)) != 1:
            return False
        # Diagonal, nonnegative, divisibility chain, zeros trailing.
        for i in range(self.d.rows):
            for j in range(self.d.cols):
                if i != j and self.d.at(i, j) != 0:
                    return False
        diag = self.diagonal()
        if any(x < 0 for x in diag):
            return False
        for k in range(1, len(diag)):
            if diag[k - 1] == 0 and diag[k] != 0:
                return False
            if diag[k - 1] != 0 and diag[k] % diag[k - 1] != 0:
                return False
        return True


def _swap_rows(m: list, i: int, j: int) -> None:
    m[i], m[j] = m[j], m[i]


def _sub_row(m: list, i: int, j: int, q: int) -> None:
    """Row i -= q * row j."""
    if q:
        ri, rj = m[i], m[j]
        m[i] = [a - q * b for a, b in zip(ri, rj)]


def _neg_row(m: list, i: int) -> None:
    m[i] = [-a for a in m[i]]


def hnf(m: IntMatrix) -> tuple:
    """Row Hermite normal form.

    Returns (h, u) with u unimodular and h = u @ m in row-echelon form:
    pivots positive, entries above each pivot reduced into [0, pivot).
    """
    rows, cols = m.rows, m.cols
    h = m.to_lists()
    u = IntMatrix.identity(rows).to_lists()
    pivot_row = 0
    for col in range(cols):
        if pivot_row >= rows:
            break
        # Euclidean elimination below pivot_row in this column.
        while True:
            best = -1
            for r in range(pivot_row, rows):
                val = h[r][col]
                if val != 0 and (best < 0 or abs(val) < abs(h[best][col])):
                    best = r
            if best < 0:
                break  # column has no pivot
            if best != pivot_row:
                _swap_rows(h, pivot_row, best)
                _swap_rows(u, pivot_row, best)
            done = True
            pivot = h[pivot_row][col]
            for r in range(pivot_row + 1, rows):
                if h[r][col] != 0:
                    q = h[r][col] // pivot
                    _sub_row(h, r, pivot_row, q)
                    _sub_row(u, r, pivot_row, q)
                    if h[r][col] != 0:
                        done = False
            if done:
                break
        if h[pivot_row][col] != 0:
            if h[pivot_row][col] < 0:
                _neg_row(h, pivot_row)
                _neg_row(u, pivot_row)
            pivot = h[pivot_row][col]
            for r in range(pivot_row):
                q = h[r][col] // pivot  # floor: residue lands in [0, pivot)
                _sub_row(h, r, pivot_row, q)
                _sub_row(u, r, pivot_row, q)
            pivot_row += 1
    return IntMatrix.from_rows(h, cols=cols), IntMatrix.from_rows(u, cols=rows)


def det(m: IntMatrix) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    if m.rows != m.cols:
        raise DimensionError("determinant requires a square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = m.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), -1)
            if swap < 0:
                return 0
            _swap_rows(a, k, swap)
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def snf(m: IntMatrix) -> SmithCertificate:
    """Smith normal form with unimodular certificate.

    The returned certificate is re-verified before being handed out; a
    failure there is a bug in this module, never a data condition.
    """
    rows, cols = m.rows, m.cols
    d = m.to_lists()
    u = IntMatrix.identity(rows).to_lists()
    v_t = IntMatrix.identity(cols).to_lists()  # transpose of v: column ops become row ops

    def col_swap(i, j):
        for r in range(rows):
            d[r][i], d[r][j] = d[r][j], d[r][i]
        _swap_rows(v_t, i, j)

    def col_sub(i, j, q):
        """Column i -= q * column j."""
        if q:
            for r in range(rows):
                d[r][i] -= q * d[r][j]
            _sub_row(v_t, i, j, q)

    def find_pivot(t):
        best = None
        for r in range(t, rows):
            for c in range(t, cols):
                val = d[r][c]
                if val != 0 and (best is None or abs(val) < abs(d[best[0]][best[1]])):
                    best = (r, c)
        return best

    def clear_at(t):
        """Zero out row and column t past the diagonal, gcd'ing into d[t][t]."""
        while True:
            pos = find_pivot(t)
            if pos is None:
                return False
            r, c = pos
            if r != t:
                _swap_rows(d, t, r)
                _swap_rows(u, t, r)
            if c != t:
                col_swap(t, c)
            dirty = False
            for r in range(t + 1, rows):
                if d[r][t] != 0:
                    q = d[r][t] // d[t][t]
                    _sub_row(d, r, t, q)
                    _sub_row(u, r, t, q)
                    if d[r][t] != 0:
                        dirty = True
            for c in range(t + 1, cols):
                if d[t][c] != 0:
                    q = d[t][c] // d[t][t]
                    col_sub(c, t, q)
                    if d[t][c] != 0:
                        dirty = True
            if not dirty:
                return True

    def clear_pair(t):
        """Euclidean clearing restricted to the 2x2 block at rows/cols t, t+1.

        Used for divisibility fixes once the matrix is diagonal; rows t and
        t+1 vanish outside this block, so nothing leaks elsewhere.
        """
        while True:
            cands = [
                (abs(d[r][c]), r - t, c - t)
                for r in (t, t + 1)
                for c in (t, t + 1)
                if d[r][c] != 0
            ]
            if not cands:
                return
            _, dr, dc = min(cands)
            if dr:
                _swap_rows(d, t, t + 1)
                _swap_rows(u, t, t + 1)
            if dc:
                col_swap(t, t + 1)
            if d[t + 1][t] != 0:
                q = d[t + 1][t] // d[t][t]
                _sub_row(d, t + 1, t, q)
                _sub_row(u, t + 1, t, q)
            if d[t][t + 1] != 0:
                q = d[t][t + 1] // d[t][t]
                col_sub(t + 1, t, q)
            if d[t + 1][t] == 0 and d[t][t + 1] == 0:
                return

    t = 0
    while t < min(rows, cols) and clear_at(t):
        t += 1
    k = t  # number of nonzero diagonal entries

    for i in range(k):
        if d[i][i] < 0:
            _neg_row(d, i)
            _neg_row(u, i)

    # Enforce the divisibility chain d[i] | d[i+1] by gcd/lcm passes.
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            if d[i + 1][i + 1] % d[i][i] != 0:
                col_sub(i, i + 1, -1)  # column i += column i+1
                clear_pair(i)
                for j in (i, i + 1):
                    if d[j][j] < 0:
                        _neg_row(d, j)
                        _neg_row(u, j)
                changed = True

    cert = SmithCertificate(
        IntMatrix.from_rows(u, cols=rows),
        IntMatrix.from_rows(d, cols=cols),
        IntMatrix.from_rows(v_t, cols=cols).transpose(),
    )
    if not cert.holds_for(m):
        raise InternalInvariantError("Smith normal form certificate failed to verify")
    return cert


def kernel_basis(m: IntMatrix) -> IntMatrix:
    """Basis of the integer kernel {x : m @ x = 0}, as matrix columns.

    The basis is saturated: it spans the full kernel lattice, not a
    finite-index sublattice.  This follows from the HNF construction --
    rows of the unimodular transform facing zero rows of the echelon form
    extend to a basis of the ambient lattice.
    """
    h, u = hnf(m.transpose())
    basis_cols = [u.row(i) for i in range(h.rows) if all(x == 0 for x in h.row(i))]
    return IntMatrix.from_columns(basis_cols, rows=m.cols)


def rank(m: IntMatrix) -> int:
    h, _ = hnf(m)
    return sum(1 for i in range(h.rows) if any(x != 0 for x in h.row(i)))


def cokernel_invariants(m: IntMatrix) -> FgAbelianGroup:
    """Invariant factors of coker(m) = Z^rows / column span of m."""
    cert = snf(m)
    factors = cert.invariant_factors()
    return FgAbelianGroup(
        rank=m.rows - len(factors),
        torsion=tuple(x for x in factors if x > 1),
    )


def solve_linear(m: IntMatrix, b: Sequence[int]) -> Optional[list]:
    """One integer solution x of m @ x = b, or None if none exists.

    Absence is certified: back-substitution against the Hermite form of the
    column lattice of m decides integer solvability exactly.
    """
    if len(b) != m.rows:
        raise DimensionError(f"rhs length {len(b)} != rows {m.rows}")
    h, u = hnf(m.transpose())
    remainder = list(b)
    y = [0] * h.rows
    for r in range(h.rows):
        pivot_col = next((c for c in range(h.cols) if h.at(r, c) != 0), -1)
        if pivot_col < 0:
            continue
        q, rem = divmod(remainder[pivot_col], h.at(r, pivot_col))
        if rem != 0:
            return None
        if q:
            y[r] = q
            for c in range(h.cols):
                remainder[c] -= q * h.at(r, c)
    if any(x != 0 for x in remainder):
        return None
    return [sum(y[r] * u.at(r, j) for r in range(u.rows)) for j in range(u.cols)]


def lattices_equal(a: IntMatrix, b: IntMatrix) -> bool:
    """Whether the column lattices of a and b coincide (same ambient rank)."""
    if a.rows != b.rows:
        raise DimensionError("ambient dimensions differ")
    ha, _ = hnf(a.transpose())
    hb, _ = hnf(b.transpose())
    ra = [r for r in ha.to_lists() if any(r)]
    rb = [r for r in hb.to_lists() if any(r)]
    return ra == rb
