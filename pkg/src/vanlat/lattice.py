"""Lattices of thimbles attached to a distinguished basis.

A ``ThimbleLattice`` is a free Z-module of rank ``nu`` together with the
integer pairing matrix of an ordered basis of thimbles and a parity
parameter: the pairing is symmetric when the parity is odd and
skew-symmetric when it is even.

Storage convention (fixed once for the whole package):

    ``gram[r][c]`` is the pairing of basis thimble ``c`` against basis
    thimble ``r``, i.e. the *column* index is the first argument of the
    pairing.  All formulas in other modules are stated in this convention.
"""

from dataclasses import dataclass

from .intmat import IntMatrix


def self_intersection(parity: int) -> int:
    """Self-pairing of a thimble: ``(-1)^(p(p-1)/2) * (1 + (-1)^(p-1))``.

    Zero for even parity, plus or minus 2 for odd parity.
    """
    return (-1) ** ((parity * (parity - 1)) // 2) * (1 + (-1) ** (parity - 1))


def diagonal_sign(parity: int) -> int:
    """The sign ``(-1)^(p(p+1)/2)`` that drives the reflection formulas."""
    return (-1) ** ((parity * (parity + 1)) // 2)


@dataclass(frozen=True)
class ThimbleLattice:
    """Rank-``nu`` lattice with parity-governed pairing matrix."""

    parity: int
    gram: IntMatrix

    def __post_init__(self):
        if not self.gram.is_square:
            raise ValueError("gram matrix must be square, got %dx%d"
                             % (self.gram.nrows, self.gram.ncols))

    @property
    def nu(self) -> int:
        return self.gram.nrows

    def pairing(self, i: int, j: int) -> int:
        """Pairing of thimble ``i`` against thimble ``j`` (0-based)."""
        return self.gram[j, i]


def validate_lattice(lat: ThimbleLattice) -> str | None:
    """Return ``None`` if the lattice is well formed, else the first violation.

    Checks the parity symmetry rule and that every diagonal entry equals
    the prescribed self-pairing for the lattice parity.
    """
    g = lat.gram
    want = self_intersection(lat.parity)
    odd = lat.parity % 2 == 1
    for r in range(g.nrows):
        if g[r, r] != want:
            return ("diagonal entry gram[%d][%d] = %d, expected %d for parity %d"
                    % (r, r, g[r, r], want, lat.parity))
        for c in range(r + 1, g.ncols):
            mirror = g[c, r] if odd else -g[c, r]
            if g[r, c] != mirror:
                kind = "symmetric" if odd else "skew-symmetric"
                return ("entries gram[%d][%d] = %d and gram[%d][%d] = %d violate the %s rule"
                        % (r, c, g[r, c], c, r, g[c, r], kind))
    return None


def require_valid(lat: ThimbleLattice) -> None:
    violation = validate_lattice(lat)
    if violation is not None:
        raise ValueError("invalid lattice: " + violation)


def milnor_number(nus: list[int]) -> int:
    """Alternating sum ``sum((-1)^i * nu_i)`` of a tower of thimble ranks."""
    if not nus:
        raise ValueError("empty rank list")
    if any(v < 0 for v in nus):
        raise ValueError("ranks must be non-negative")
    return sum((-1) ** i * v for i, v in enumerate(nus))


@dataclass(frozen=True)
class SignVector:
    """Tuple of signs ``s_1, ..., s_{p+1}``, each +1 or -1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        for s in self.entries:
            if s not in (1, -1):
                raise ValueError("sign entries must be +1 or -1, got %r" % (s,))

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]
