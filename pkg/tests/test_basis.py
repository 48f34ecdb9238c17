import random

import pytest

from vanlat.basis import (BasisChange, BraidMove, BraidWord, apply_braid_word,
                          braid_alpha, braid_alpha_inverse, monodromy,
                          orientation_flip, parse_braid_word,
                          picard_lefschetz)
from vanlat.gen import random_braid_word, random_lattice
from vanlat.intmat import IntMatrix
from vanlat.lattice import ThimbleLattice, self_intersection


def a2():
    return ThimbleLattice(1, IntMatrix.from_rows([[2, -1], [-1, 2]]))


def skew2():
    return ThimbleLattice(2, IntMatrix.from_rows([[0, 1], [-1, 0]]))


# -- reflections and monodromy ----------------------------------------------

def test_picard_lefschetz_a2():
    # delta_1 -> -delta_1, delta_2 -> delta_2 + delta_1 (images are columns)
    assert picard_lefschetz(a2(), 1) == IntMatrix.from_rows([[-1, 1], [0, 1]])


def test_picard_lefschetz_fixes_reflecting_thimble_even_parity():
    lat = skew2()
    for j in (1, 2):
        h = picard_lefschetz(lat, j)
        col = [h[r, j - 1] for r in range(2)]
        assert col == [1 if r == j - 1 else 0 for r in range(2)]


def test_picard_lefschetz_rank_one():
    lat = ThimbleLattice(1, IntMatrix.from_rows([[2]]))
    assert picard_lefschetz(lat, 1) == IntMatrix.from_rows([[-1]])


def test_picard_lefschetz_range():
    with pytest.raises(ValueError):
        picard_lefschetz(a2(), 0)
    with pytest.raises(ValueError):
        picard_lefschetz(a2(), 3)


def test_picard_lefschetz_determinants():
    rng = random.Random(31)
    for _ in range(100):
        parity = rng.choice((1, 2, 3, 4))
        nu = rng.randint(1, 6)
        lat = random_lattice(rng, nu, parity)
        for j in range(1, nu + 1):
            assert picard_lefschetz(lat, j).det() in (1, -1)
    one = random_lattice(rng, 1, 3)
    assert picard_lefschetz(one, 1).det() == (-1) ** 3


def test_monodromy_rank_zero_and_one():
    assert monodromy(ThimbleLattice(1, IntMatrix(()))) == IntMatrix.identity(0)
    lat = ThimbleLattice(1, IntMatrix.from_rows([[2]]))
    assert monodromy(lat) == IntMatrix.from_rows([[-1]])


def test_monodromy_a2_has_order_three():
    h = monodromy(a2())
    assert h ** 3 == IntMatrix.identity(2)
    assert h != IntMatrix.identity(2) and h ** 2 != IntMatrix.identity(2)


def test_monodromy_requires_valid_lattice():
    bad = ThimbleLattice(1, IntMatrix.from_rows([[2, 1], [-1, 2]]))
    with pytest.raises(ValueError):
        monodromy(bad)


# -- braid moves -------------------------------------------------------------

def test_braid_alpha_a2_worked_example():
    new, change = braid_alpha(a2(), 1)
    assert new.gram == IntMatrix.from_rows([[2, 1], [1, 2]])
    assert change.matrix == IntMatrix.from_rows([[1, 1], [1, 0]])


def test_braid_alpha_skew_flips_pairing():
    new, _ = braid_alpha(skew2(), 1)
    assert new.gram == IntMatrix.from_rows([[0, -1], [1, 0]])


def test_braid_alpha_inverse_of_worked_example():
    mid = ThimbleLattice(1, IntMatrix.from_rows([[2, 1], [1, 2]]))
    back, _ = braid_alpha_inverse(mid, 1)
    assert back.gram == a2().gram


def test_braid_round_trip_both_orders():
    rng = random.Random(7)
    for _ in range(120):
        parity = rng.choice((1, 2, 3, 4))
        nu = rng.randint(2, 6)
        lat = random_lattice(rng, nu, parity)
        j = rng.randint(1, nu - 1)
        fwd, p1 = braid_alpha(lat, j)
        back, p2 = braid_alpha_inverse(fwd, j)
        assert back.gram == lat.gram
        assert p1.then(p2).matrix == IntMatrix.identity(nu)
        inv, q1 = braid_alpha_inverse(lat, j)
        again, q2 = braid_alpha(inv, j)
        assert again.gram == lat.gram
        assert q1.then(q2).matrix == IntMatrix.identity(nu)


def test_braid_moves_preserve_diagonal():
    rng = random.Random(13)
    for _ in range(60):
        parity = rng.choice((1, 2, 3, 4, 5))
        nu = rng.randint(2, 6)
        lat = random_lattice(rng, nu, parity)
        word = random_braid_word(rng, nu, max_len=8)
        new, _ = apply_braid_word(lat, word)
        want = self_intersection(parity)
        assert all(new.gram[k, k] == want for k in range(nu))


def test_braid_relation():
    rng = random.Random(17)
    for _ in range(80):
        parity = rng.choice((1, 2, 3, 4))
        nu = rng.randint(3, 6)
        lat = random_lattice(rng, nu, parity)
        j = rng.randint(1, nu - 2)
        left = apply_braid_word(lat, parse_braid_word("a%d a%d a%d" % (j, j + 1, j)))
        right = apply_braid_word(lat, parse_braid_word("a%d a%d a%d" % (j + 1, j, j + 1)))
        assert left[0].gram == right[0].gram
        assert left[1].matrix == right[1].matrix


def test_monodromy_is_conjugation_covariant():
    rng = random.Random(23)
    for _ in range(60):
        parity = rng.choice((1, 2, 3, 4))
        nu = rng.randint(1, 6)
        lat = random_lattice(rng, nu, parity)
        word = random_braid_word(rng, nu, max_len=6)
        new, change = apply_braid_word(lat, word)
        p = change.matrix
        assert monodromy(new) == p.unimodular_inverse() * monodromy(lat) * p


# -- orientation flips -------------------------------------------------------

def test_flip_double_is_identity():
    lat = a2()
    once, p1 = orientation_flip(lat, 2)
    twice, p2 = orientation_flip(once, 2)
    assert twice.gram == lat.gram
    assert p1.then(p2).matrix == IntMatrix.identity(2)


def test_flip_a2_worked_example():
    new, change = orientation_flip(a2(), 2)
    assert new.gram == IntMatrix.from_rows([[2, 1], [1, 2]])
    assert change.matrix == IntMatrix.diagonal([1, -1])


def test_flip_preserves_diagonal():
    rng = random.Random(29)
    for _ in range(40):
        parity = rng.choice((1, 2, 3, 4))
        nu = rng.randint(1, 5)
        lat = random_lattice(rng, nu, parity)
        j = rng.randint(1, nu)
        new, _ = orientation_flip(lat, j)
        assert all(new.gram[k, k] == lat.gram[k, k] for k in range(nu))


# -- words -------------------------------------------------------------------

def test_empty_word_is_identity():
    lat = a2()
    new, change = apply_braid_word(lat, BraidWord(()))
    assert new.gram == lat.gram
    assert change.matrix == IntMatrix.identity(2)


def test_cancelling_words():
    lat = a2()
    for text in ("a1 A1", "a1 f1 f1 A1"):
        new, change = apply_braid_word(lat, parse_braid_word(text))
        assert new.gram == lat.gram
        assert change.matrix == IntMatrix.identity(2)


def test_parse_braid_word():
    word = parse_braid_word("a1 A2 f3")
    assert word.moves == (BraidMove("a", 1), BraidMove("A", 2), BraidMove("f", 3))
    assert str(word) == "a1 A2 f3"
    with pytest.raises(ValueError):
        parse_braid_word("b1")
    with pytest.raises(ValueError):
        parse_braid_word("a0")


def test_word_position_out_of_range():
    with pytest.raises(ValueError):
        apply_braid_word(a2(), parse_braid_word("a2"))
    with pytest.raises(ValueError):
        apply_braid_word(a2(), parse_braid_word("f3"))


def test_basis_change_must_be_unimodular():
    with pytest.raises(ValueError):
        BasisChange(IntMatrix.from_rows([[2]]))
