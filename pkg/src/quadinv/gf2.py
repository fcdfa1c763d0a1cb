"""Dense linear algebra over GF(2) with Python ints as bit vectors.

Bit ``i`` of a column vector is the entry in row ``i``; bit ``j`` of a
solution vector is the coefficient of column ``j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .errors import NoSolution


@dataclass(frozen=True)
class LinearSystemGF2:
    """``sum_j x_j * columns[j] == rhs`` with ``nrows`` rows."""

    nrows: int
    columns: tuple
    rhs: int = 0
    rows: tuple = ()

    def __post_init__(self):
        limit = 1 << self.nrows
        if any(c < 0 or c >= limit for c in self.columns) or not 0 <= self.rhs < limit:
            raise ValueError("dimension mismatch: vector wider than the row count")
        if self.rows and len(self.rows) != self.nrows:
            raise ValueError("dimension mismatch: row labels vs row count")

    @classmethod
    def from_dense(cls, matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> "LinearSystemGF2":
        nrows = len(matrix)
        if len(rhs) != nrows:
            raise ValueError("dimension mismatch: rhs length")
        ncols = len(matrix[0]) if nrows else 0
        if any(len(r) != ncols for r in matrix):
            raise ValueError("dimension mismatch: ragged matrix")
        cols = []
        for j in range(ncols):
            cols.append(sum(1 << i for i in range(nrows) if matrix[i][j] & 1))
        b = sum(1 << i for i in range(nrows) if rhs[i] & 1)
        return cls(nrows, tuple(cols), b)

    @property
    def ncols(self) -> int:
        return len(self.columns)


class GF2Solver:
    """Echelon data for a fixed list of columns, reusable across right-hand sides."""

    def __init__(self, columns: Sequence[int]):
        self.ncols = len(columns)
        self._pivots: dict = {}   # leading bit -> (reduced vector, column combination)
        kernel: dict = {}         # lowest bit -> combination, kept in echelon form
        self.basic_columns: list = []
        for j, col in enumerate(columns):
            v, c = self._reduce(col, 1 << j)
            if v:
                self._pivots[v.bit_length() - 1] = (v, c)
                self.basic_columns.append(j)
            else:
                _insert_low(kernel, c)
        self._kernel = kernel

    def _reduce(self, v: int, combo: int = 0):
        pivots = self._pivots
        while v:
            p = pivots.get(v.bit_length() - 1)
            if p is None:
                break
            v ^= p[0]
            combo ^= p[1]
        return v, combo

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def kernel(self) -> list:
        """A basis of the solution space of the homogeneous system."""
        return [self._kernel[k] for k in sorted(self._kernel)]

    def in_span(self, rhs: int) -> bool:
        return self._reduce(rhs)[0] == 0

    def solve_basic(self, rhs: int) -> int:
        """The unique solution supported on ``basic_columns``.

        ``basic_columns`` are the columns independent of all earlier ones.
        """
        v, x = self._reduce(rhs)
        if v:
            raise NoSolution("right-hand side is not in the column span")
        return x

    def solve(self, rhs: int) -> int:
        """The lexicographically smallest solution, as a bitmask over columns.

        Lexicographic means column 0 is compared first; a solution with
        ``x_0 = 0`` beats any with ``x_0 = 1``, and so on.
        """
        v, x = self._reduce(rhs)
        if v:
            raise NoSolution("right-hand side is not in the column span")
        for low in sorted(self._kernel):
            if (x >> low) & 1:
                x ^= self._kernel[low]
        return x


def _insert_low(basis: dict, v: int) -> None:
    while v:
        low = (v & -v).bit_length() - 1
        b = basis.get(low)
        if b is None:
            basis[low] = v
            return
        v ^= b


def solve_gf2(system: LinearSystemGF2) -> tuple:
    """Solve ``system`` exactly; return the solution as a tuple of bits.

    Raises :class:`NoSolution` when the system is inconsistent.
    """
    x = GF2Solver(system.columns).solve(system.rhs)
    return tuple((x >> j) & 1 for j in range(system.ncols))


def bits(x: int) -> list:
    """Indices of the set bits of ``x``, ascending."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


class KeyIndex:
    """Assigns consecutive bit positions to hashable keys (monomials, pairs)."""

    def __init__(self, keys: Iterable[Hashable] = ()):
        self.pos: dict = {}
        self.keys: list = []
        for k in keys:
            self.add(k)

    def add(self, key: Hashable) -> int:
        i = self.pos.get(key)
        if i is None:
            i = self.pos[key] = len(self.keys)
            self.keys.append(key)
        return i

    def vector(self, keys: Iterable[Hashable]) -> int:
        v = 0
        for k in keys:
            v ^= 1 << self.add(k)
        return v

    def __len__(self):
        return len(self.keys)
