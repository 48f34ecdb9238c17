"""Seeded random data for property tests and the verification suite.

Everything here is deterministic given the seed.  Consistent single-level
data comes from :func:`vanlat.conjugation.generate_consistent_instance`;
this module assembles lattices, braid words, whole tower instances, cycle
data, and matched sign-flipped variants.
"""

import random

from .basis import BraidMove, BraidWord
from .conjugation import (ConjugationData, ConjugatePair, MorseSpec, RealPoint,
                          derive_sigma_tilde, generate_consistent_instance)
from .index import CycleData, IcisInstance, LevelData
from .intmat import IntMatrix
from .lattice import SignVector, ThimbleLattice, self_intersection


def random_lattice(rng: random.Random, nu: int, parity: int,
                   max_entry: int = 5) -> ThimbleLattice:
    """Valid lattice with uniform off-diagonal entries in ``[-max, max]``."""
    diag = self_intersection(parity)
    eps = 1 if parity % 2 == 1 else -1
    rows = [[0] * nu for _ in range(nu)]
    for i in range(nu):
        rows[i][i] = diag
    for r in range(nu):
        for c in range(r + 1, nu):
            v = rng.randint(-max_entry, max_entry)
            rows[r][c] = v
            rows[c][r] = eps * v
    return ThimbleLattice(parity, IntMatrix.from_rows(rows, width=nu))


def random_braid_word(rng: random.Random, nu: int, max_len: int = 12,
                      include_flips: bool = True) -> BraidWord:
    """Random word valid for rank ``nu``; empty when the rank allows no moves."""
    kinds = "aAf" if include_flips else "aA"
    moves = []
    for _ in range(rng.randint(0, max_len)):
        kind = rng.choice(kinds)
        top = nu if kind == "f" else nu - 1
        if top < 1:
            continue
        moves.append(BraidMove(kind, rng.randint(1, top)))
    return BraidWord(tuple(moves))


def attach_cycles(lat: ThimbleLattice, conj: ConjugationData,
                  pad: int = 0) -> CycleData:
    """Cycle data matching a consistent level.

    Uses the lattice pairing with both conjugation actions; ``pad`` extra
    null directions model the radical that the boundary map contributes,
    on which both actions are taken to be trivial.
    """
    tilde = derive_sigma_tilde(conj, lat).matrix
    if pad == 0:
        return CycleData(lat.gram, conj.sigma, tilde)
    n = lat.nu + pad

    def padded(m, fill):
        rows = [[0] * n for _ in range(n)]
        for r in range(lat.nu):
            for c in range(lat.nu):
                rows[r][c] = m[r, c]
        for k in range(lat.nu, n):
            rows[k][k] = fill
        return IntMatrix.from_rows(rows, width=n)

    return CycleData(padded(lat.gram, 0), padded(conj.sigma, 1),
                     padded(tilde, 1))


def random_icis_instance(seed: int, n: int, p: int, rank_bound: int,
                         with_cycles: bool = False,
                         real_only_level0: bool = False) -> IcisInstance:
    """Tower instance with a consistent level for each ``i = 0 .. p``."""
    rng = random.Random(seed)
    signs = SignVector(tuple(rng.choice((1, -1)) for _ in range(p + 1)))
    levels = []
    for i in range(p + 1):
        parity = n + i
        attempt = 0
        while True:
            lat, conj = generate_consistent_instance(
                rng.randrange(2 ** 32), rank_bound, parity)
            if i == 0 and real_only_level0 and any(
                    isinstance(pt, ConjugatePair) for pt in conj.morse.points):
                attempt += 1
                if attempt > 200:
                    raise RuntimeError("no all-real level 0 found")
                continue
            break
        cycles = None
        if with_cycles and parity % 2 == 1:
            cycles = attach_cycles(lat, conj, pad=rng.choice((0, 0, 1, 2)))
        levels.append(LevelData(i, lat, conj, cycles))
    return IcisInstance(n, p, signs, tuple(levels))


def flip_last_sign(inst: IcisInstance) -> IcisInstance:
    """Matched variant of an instance with the last sign entry negated.

    Only the last sign's flip leaves every deeper level's data meaningful,
    and the level-0 data transforms by reversing the basis: Morse indices
    become ``parity - m``, the gram matrix is transposed and reversed, and
    the companion conjugation, reversed, becomes the new conjugation.  The
    construction needs an all-real level 0 (a conjugate pair's thimbles
    would also pick up a path twist that this bookkeeping does not model).
    The flip is an involution and preserves the total index.
    """
    level0 = inst.levels[0]
    conj = level0.require_conj()
    if any(isinstance(pt, ConjugatePair) for pt in conj.morse.points):
        raise ValueError("sign flip needs an all-real level 0")
    lat = level0.lattice
    nu = lat.nu
    parity = lat.parity
    rev = IntMatrix.from_rows(
        [[1 if r + c == nu - 1 else 0 for c in range(nu)] for r in range(nu)],
        width=nu)
    tilde = derive_sigma_tilde(conj, lat).matrix
    new_gram = rev * lat.gram.transpose() * rev
    new_sigma = rev * tilde * rev
    new_points = tuple(RealPoint(parity - pt.morse_index)
                       for pt in reversed(conj.morse.points))
    new_lat = ThimbleLattice(parity, new_gram)
    new_conj = ConjugationData(new_sigma, MorseSpec(new_points))
    cycles = None
    if level0.cycles is not None:
        cycles = attach_cycles(new_lat, new_conj)
    new_level0 = LevelData(0, new_lat, new_conj, cycles)
    signs = inst.signs.entries
    new_signs = SignVector(signs[:-1] + (-signs[-1],))
    return IcisInstance(inst.n, inst.p, new_signs,
                        (new_level0,) + inst.levels[1:])
