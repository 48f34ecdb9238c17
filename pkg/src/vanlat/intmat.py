"""Exact arbitrary-precision integer matrices.

Everything in this package runs on plain Python integers, so there is no
overflow at any magnitude.  Matrices are immutable: all operations return
new values.

Operator convention used throughout the package: the matrix ``M`` of a
linear map sends the ``i``-th basis vector to ``sum_j M[j][i] * f_j``,
i.e. images are the *columns* of ``M``.
"""

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IntMatrix:
    """An immutable integer matrix stored as a tuple of row tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        widths = {len(r) for r in self.rows}
        if len(widths) > 1:
            raise ValueError("ragged rows: %s" % sorted(widths))
        for r in self.rows:
            for x in r:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError("non-integer entry %r" % (x,))

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows, width=None):
        """Build from any iterable of row iterables.

        ``width`` pins the column count for matrices with zero rows.
        """
        tup = tuple(tuple(int(x) if type(x) is int else x for x in row)
                    for row in rows)
        m = cls(tup)
        if width is not None and m.rows and m.ncols != width:
            raise ValueError("expected %d columns, got %d" % (width, m.ncols))
        return m

    @classmethod
    def identity(cls, n):
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n))
                         for i in range(n)))

    @classmethod
    def zeros(cls, nrows, ncols):
        return cls(tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def diagonal(cls, entries):
        entries = list(entries)
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n))
                         for i in range(n)))

    # -- shape and access --------------------------------------------------

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, key):
        r, c = key
        return self.rows[r][c]

    def row(self, r):
        return self.rows[r]

    def to_lists(self):
        return [list(r) for r in self.rows]

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix(tuple(tuple(other * x for x in r) for r in self.rows))
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch: %dx%d times %dx%d"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        bt = tuple(zip(*other.rows)) if other.rows else ((),) * other.ncols
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in bt)
            for row in self.rows))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch in addition")
        return IntMatrix(tuple(tuple(a + b for a, b in zip(ra, rb))
                               for ra, rb in zip(self.rows, other.rows)))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return IntMatrix(tuple(tuple(-x for x in r) for r in self.rows))

    def __pow__(self, k):
        if not self.is_square or k < 0:
            raise ValueError("powers need a square matrix and k >= 0")
        out = IntMatrix.identity(self.nrows)
        for _ in range(k):
            out = out * self
        return out

    def transpose(self):
        if not self.rows:
            return IntMatrix(())
        return IntMatrix(tuple(zip(*self.rows)))

    def is_symmetric(self):
        return self.is_square and all(
            self.rows[r][c] == self.rows[c][r]
            for r in range(self.nrows) for c in range(r + 1, self.ncols))

    def is_skew_symmetric(self):
        return self.is_square and all(
            self.rows[r][c] == -self.rows[c][r]
            for r in range(self.nrows) for c in range(r, self.ncols))

    def det(self):
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.nrows
        if n == 0:
            return 1
        m = self.to_lists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                piv = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
                if piv is None:
                    return 0
                m[k], m[piv] = m[piv], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def unimodular_inverse(self):
        """Exact integer inverse; requires ``|det| == 1``."""
        d = self.det()
        if d not in (1, -1):
            raise ValueError("matrix is not unimodular (det = %d)" % d)
        n = self.nrows
        aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.rows)]
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            pv = aug[col][col]
            aug[col] = [x / pv for x in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        inv = [row[n:] for row in aug]
        assert all(x.denominator == 1 for row in inv for x in row)
        return IntMatrix(tuple(tuple(int(x) for x in row) for row in inv))

    def __str__(self):
        return "[%s]" % ", ".join("[%s]" % ", ".join(str(x) for x in r)
                                  for r in self.rows)


def det(m: IntMatrix) -> int:
    return m.det()


def unimodular_inverse(m: IntMatrix) -> IntMatrix:
    return m.unimodular_inverse()
