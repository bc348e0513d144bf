"""Exact dense linear algebra over Q and Q(zeta_8).

Everything here is fraction-free in spirit but implemented with exact
field division (Fraction / CycScalar inverses), which is fast enough at
the 15x15 scale this package needs.  Pivots are chosen by a cheapness
heuristic to keep intermediate entries small.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .mpoly import MPoly
from .scalar import (CycScalar, as_cyc, scalar_complexity, scalar_inverse,
                     scalar_is_zero)

Entry = object  # Fraction | CycScalar (ints are normalised away)


def _norm_entry(v) -> Entry:
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, (Fraction, CycScalar)):
        return v
    raise TypeError(f"bad matrix entry: {v!r}")


class ExactMatrix:
    """Immutable-ish dense matrix with exact entries."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Sequence[Sequence]) -> None:
        self.rows = [[_norm_entry(v) for v in row] for row in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> ExactMatrix:
        return cls([[Fraction(0)] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> ExactMatrix:
        if not cols:
            return cls([])
        n = len(cols[0])
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    def column(self, j: int) -> list:
        return [self.rows[i][j] for i in range(self.nrows)]

    def transpose(self) -> ExactMatrix:
        return ExactMatrix([[self.rows[i][j] for i in range(self.nrows)]
                            for j in range(self.ncols)])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.ncols != other.nrows:
                raise ValueError("shape mismatch")
            out = []
            for i in range(self.nrows):
                row = []
                for j in range(other.ncols):
                    acc = Fraction(0)
                    for k in range(self.ncols):
                        a = self.rows[i][k]
                        if scalar_is_zero(a):
                            continue
                        acc = acc + a * other.rows[k][j]
                    row.append(acc)
                out.append(row)
            return ExactMatrix(out)
        return NotImplemented

    def apply(self, vec: Sequence) -> list:
        if len(vec) != self.ncols:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.nrows):
            acc = Fraction(0)
            for k in range(self.ncols):
                a = self.rows[i][k]
                if scalar_is_zero(a):
                    continue
                acc = acc + a * vec[k]
            out.append(acc)
        return out

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return ExactMatrix([[a - b for a, b in zip(r1, r2)]
                            for r1, r2 in zip(self.rows, other.rows)])

    def scale(self, s) -> ExactMatrix:
        s = _norm_entry(s)
        return ExactMatrix([[s * v for v in row] for row in self.rows])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            return False
        return all(as_cyc(a) == as_cyc(b)
                   for r1, r2 in zip(self.rows, other.rows)
                   for a, b in zip(r1, r2))

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(v) for v in row) for row in self.rows)
        return f"ExactMatrix[{body}]"

    # -- elimination ------------------------------------------------------

    def rref(self) -> tuple[ExactMatrix, list[int]]:
        """Reduced row echelon form and the pivot column list."""
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        r = 0
        for c in range(self.ncols):
            if r >= self.nrows:
                break
            # Cheapest nonzero pivot in column c at or below row r.
            best = None
            best_cost = None
            for i in range(r, self.nrows):
                v = rows[i][c]
                if scalar_is_zero(v):
                    continue
                cost = scalar_complexity(v)
                if best_cost is None or cost < best_cost:
                    best, best_cost = i, cost
            if best is None:
                continue
            rows[r], rows[best] = rows[best], rows[r]
            inv = scalar_inverse(rows[r][c])
            rows[r] = [inv * v for v in rows[r]]
            for i in range(self.nrows):
                if i == r:
                    continue
                f = rows[i][c]
                if scalar_is_zero(f):
                    continue
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return ExactMatrix(rows), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> list[list]:
        """Basis of the right null space."""
        red, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            vec: list = [Fraction(0)] * self.ncols
            vec[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                vec[pc] = -red.rows[r][fc]
            basis.append(vec)
        return basis

    def solve(self, rhs: Sequence) -> list:
        """One exact solution of A x = rhs; raises if inconsistent."""
        if len(rhs) != self.nrows:
            raise ValueError("shape mismatch")
        aug = ExactMatrix([list(row) + [_norm_entry(v)]
                           for row, v in zip(self.rows, rhs)])
        red, pivots = aug.rref()
        if self.ncols in pivots:
            raise ValueError("inconsistent linear system")
        x: list = [Fraction(0)] * self.ncols
        for r, pc in enumerate(pivots):
            x[pc] = red.rows[r][self.ncols]
        return x

    def inverse(self) -> ExactMatrix:
        if self.nrows != self.ncols:
            raise ValueError("only square matrices invert")
        n = self.nrows
        aug = ExactMatrix([list(row) + [Fraction(int(i == j)) for j in range(n)]
                           for i, row in enumerate(self.rows)])
        red, pivots = aug.rref()
        if pivots != list(range(n)):
            raise ValueError("singular matrix")
        return ExactMatrix([row[n:] for row in red.rows])

    def determinant(self):
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        rows = [list(r) for r in self.rows]
        n = self.nrows
        det = Fraction(1)
        for c in range(n):
            piv = None
            for i in range(c, n):
                if not scalar_is_zero(rows[i][c]):
                    piv = i
                    break
            if piv is None:
                return Fraction(0)
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = -det
            det = det * rows[c][c]
            inv = scalar_inverse(rows[c][c])
            for i in range(c + 1, n):
                f = rows[i][c] * inv
                if scalar_is_zero(f):
                    continue
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return det


# ---------------------------------------------------------------------------
# Subspaces of an ambient exact vector space


class Subspace:
    """Subspace of an n-dimensional column space, held as an rref basis."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Sequence[Sequence]) -> None:
        self.ambient_dim = ambient_dim
        if vectors:
            mat = ExactMatrix(vectors)
            if mat.ncols != ambient_dim:
                raise ValueError("vector length differs from ambient dimension")
            red, pivots = mat.rref()
            self.basis = [red.rows[r] for r in range(len(pivots))]
        else:
            self.basis = []

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vec: Sequence) -> bool:
        probe = Subspace(self.ambient_dim, self.basis + [list(vec)])
        return probe.dim == self.dim

    def contains_space(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.ambient_dim == other.ambient_dim
                and self.dim == other.dim and self.contains_space(other))

    __hash__ = None  # type: ignore[assignment]

    def sum(self, other: Subspace) -> Subspace:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace(self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: Subspace) -> Subspace:
        """Zassenhaus block elimination."""
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        n = self.ambient_dim
        block: list[list] = []
        for v in self.basis:
            block.append(list(v) + list(v))
        for w in other.basis:
            block.append(list(w) + [Fraction(0)] * n)
        if not block:
            return Subspace(n, [])
        red, pivots = ExactMatrix(block).rref()
        vectors = []
        for r in range(len(pivots)):
            if pivots[r] >= n:
                vectors.append(red.rows[r][n:])
        return Subspace(n, vectors)

    def coordinates(self, vec: Sequence) -> list:
        """Coefficients of vec in the stored basis; raises if outside."""
        mat = ExactMatrix.from_columns(self.basis)
        return mat.solve(list(vec))


def eigenspace(mat: ExactMatrix, eigenvalue) -> Subspace:
    shifted = mat - ExactMatrix.identity(mat.nrows).scale(eigenvalue)
    return Subspace(mat.nrows, shifted.kernel_basis())


def joint_fixed_space(mats: Sequence[ExactMatrix],
                      eigenvalues: Sequence | None = None) -> Subspace:
    """Intersection of eigenspaces, one eigenvalue per matrix (default all 1)."""
    if not mats:
        raise ValueError("need at least one matrix")
    if eigenvalues is None:
        eigenvalues = [Fraction(1)] * len(mats)
    space = eigenspace(mats[0], eigenvalues[0])
    for m, lam in zip(mats[1:], list(eigenvalues)[1:]):
        space = space.intersection(eigenspace(m, lam))
    return space


# ---------------------------------------------------------------------------
# Jacobians of polynomial maps


def jacobian(polys: Sequence[MPoly], var_names: Sequence[str]) -> list[list[MPoly]]:
    return [[p.diff(v) for v in var_names] for p in polys]


def jacobian_at(polys: Sequence[MPoly], var_names: Sequence[str],
                point: dict) -> ExactMatrix:
    """Evaluate the Jacobian at a point given as {var_name: exact value}.

    Every variable appearing in any derivative must be bound.
    """
    rows = []
    for p in polys:
        row = []
        for v in var_names:
            val = p.diff(v).evaluate(point)
            row.append(val)
        rows.append(row)
    return ExactMatrix(rows)
