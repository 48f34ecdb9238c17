"""The triangular operator attached to a distinguished basis and its inverse.

``var_inverse`` maps the lattice to its dual: basis thimble ``i`` goes to

    sgn * dual_i  -  sum_{j < i} <delta_i, delta_j> * dual_j

with ``sgn = (-1)^(p(p+1)/2)``.  In the stored convention the matrix is
upper triangular with that sign on the diagonal, so it is always
unimodular.  Maps into the dual transform by congruence under a basis
change ``P`` (``M -> P^T M P``), which is what makes the operator itself,
as opposed to its matrix, independent of the distinguished basis.
"""

from .basis import BraidWord, apply_braid_word, monodromy
from .intmat import IntMatrix
from .lattice import ThimbleLattice, diagonal_sign, require_valid


def var_inverse(lat: ThimbleLattice) -> IntMatrix:
    """Upper-triangular matrix of the lattice-to-dual operator."""
    require_valid(lat)
    d = diagonal_sign(lat.parity)
    g = lat.gram
    rows = [[d if r == c else (-g[r, c] if r < c else 0)
             for c in range(lat.nu)] for r in range(lat.nu)]
    return IntMatrix.from_rows(rows)


def var(lat: ThimbleLattice) -> IntMatrix:
    """Exact integer inverse of :func:`var_inverse`."""
    return var_inverse(lat).unimodular_inverse()


def intersection_operator(lat: ThimbleLattice) -> IntMatrix:
    """Matrix of the pairing viewed as a map into the dual.

    In the stored convention this is the gram matrix itself.
    """
    return lat.gram


def check_s_relation(lat: ThimbleLattice) -> str | None:
    """Verify ``S = -M + (-1)^parity * M^T`` entrywise, ``M = var_inverse``.

    Holds identically on valid lattices; a failure indicates a convention
    bug, and the first offending entry is reported.
    """
    require_valid(lat)
    m = var_inverse(lat)
    rhs = -m + (-1) ** lat.parity * m.transpose()
    s = intersection_operator(lat)
    for r in range(lat.nu):
        for c in range(lat.nu):
            if s[r, c] != rhs[r, c]:
                return ("entry (%d, %d): pairing matrix has %d but "
                        "-M + (-1)^%d M^T gives %d"
                        % (r, c, s[r, c], lat.parity, rhs[r, c]))
    return None


def check_monodromy_relation(lat: ThimbleLattice) -> str | None:
    """Verify the reflection-product monodromy equals
    ``(-1)^parity * var * var_inverse^T`` exactly."""
    require_valid(lat)
    h = monodromy(lat)
    m = var_inverse(lat)
    rhs = (-1) ** lat.parity * (var(lat) * m.transpose())
    for r in range(lat.nu):
        for c in range(lat.nu):
            if h[r, c] != rhs[r, c]:
                return ("entry (%d, %d): monodromy has %d but "
                        "(-1)^%d Var Var^{-1 T} gives %d"
                        % (r, c, h[r, c], lat.parity, rhs[r, c]))
    return None


def var_inverse_as_operator_after_braid(lat: ThimbleLattice,
                                        word: BraidWord) -> str | None:
    """Check basis independence of the operator under a braid word.

    With ``(new_lat, P) = apply_braid_word(lat, word)`` the matrices must
    satisfy ``var_inverse(new_lat) = P^T var_inverse(lat) P`` exactly.
    """
    require_valid(lat)
    new_lat, change = apply_braid_word(lat, word)
    fresh = var_inverse(new_lat)
    p = change.matrix
    transported = p.transpose() * var_inverse(lat) * p
    for r in range(lat.nu):
        for c in range(lat.nu):
            if fresh[r, c] != transported[r, c]:
                return ("entry (%d, %d) after word '%s': recomputed %d, "
                        "congruence-transported %d"
                        % (r, c, word, fresh[r, c], transported[r, c]))
    return None
