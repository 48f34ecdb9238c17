"""Exact inertia of integer symmetric bilinear forms.

Degenerate forms are fine: the radical shows up as ``n_zero`` rather than
as an error.
"""

from dataclasses import dataclass
from fractions import Fraction

from .intmat import IntMatrix


@dataclass(frozen=True)
class Signature:
    """Inertia triple of a symmetric form: positive, negative, null counts."""

    n_plus: int
    n_minus: int
    n_zero: int

    def __post_init__(self):
        if min(self.n_plus, self.n_minus, self.n_zero) < 0:
            raise ValueError("inertia counts must be non-negative")

    @property
    def rank_total(self) -> int:
        return self.n_plus + self.n_minus + self.n_zero

    @property
    def sgn(self) -> int:
        return self.n_plus - self.n_minus

    def __str__(self):
        return "(%d, %d, %d)" % (self.n_plus, self.n_minus, self.n_zero)


def exact_signature(m: IntMatrix) -> Signature:
    """Inertia of a symmetric integer matrix by exact congruence elimination.

    Symmetric Gaussian elimination over the rationals.  When the active
    block has no nonzero diagonal entry but is not zero, a 2x2 pivot on an
    off-diagonal entry splits off a hyperbolic plane, which contributes
    ``(1, 1, 0)``.
    """
    if not m.is_square:
        raise ValueError("signature of a non-square matrix")
    if not m.is_symmetric():
        raise ValueError("signature of a non-symmetric matrix")
    a = [[Fraction(x) for x in row] for row in m.rows]
    active = list(range(m.nrows))
    n_plus = n_minus = n_zero = 0
    while active:
        piv = next((i for i in active if a[i][i] != 0), None)
        if piv is not None:
            pv = a[piv][piv]
            if pv > 0:
                n_plus += 1
            else:
                n_minus += 1
            active.remove(piv)
            for r in active:
                f = a[r][piv] / pv
                if f:
                    for c in active:
                        a[r][c] -= f * a[piv][c]
            continue
        pair = None
        for ii, i in enumerate(active):
            for j in active[ii + 1:]:
                if a[i][j] != 0:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            n_zero += len(active)
            break
        i, j = pair
        b = a[i][j]
        n_plus += 1
        n_minus += 1
        active.remove(i)
        active.remove(j)
        for r in active:
            ui, uj = a[r][i], a[r][j]
            if ui or uj:
                for c in active:
                    a[r][c] -= (ui * a[j][c] + uj * a[i][c]) / b
    return Signature(n_plus, n_minus, n_zero)
