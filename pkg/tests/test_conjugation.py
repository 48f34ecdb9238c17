import pytest

from vanlat.conjugation import (ConjugatePair, ConjugationData, MorseSpec,
                                RealPoint, block_diagonal_structure_check,
                                build_sigma, derive_sigma_tilde,
                                generate_consistent_instance,
                                signature_by_blocks, var_sigma_form)
from vanlat.intmat import IntMatrix
from vanlat.lattice import ThimbleLattice, validate_lattice
from vanlat.signature import exact_signature


def a2_lat():
    return ThimbleLattice(1, IntMatrix.from_rows([[2, -1], [-1, 2]]))


def test_build_sigma_single_minimum():
    conj = build_sigma(MorseSpec((RealPoint(0),)), 1, [])
    assert conj.sigma == IntMatrix.from_rows([[1]])


def test_build_sigma_diagonal_real_points():
    conj = build_sigma(MorseSpec((RealPoint(0), RealPoint(1))), 1, [])
    assert conj.sigma == IntMatrix.diagonal([1, -1])


def test_build_sigma_pair_block():
    conj = build_sigma(MorseSpec((ConjugatePair(3),)), 1, [])
    assert conj.sigma == IntMatrix.from_rows([[0, 1], [1, 0]])


def test_build_sigma_rejects_non_involution():
    # equal Morse parity on both slots forces the upper entry to vanish
    with pytest.raises(ValueError, match="involution"):
        build_sigma(MorseSpec((RealPoint(0), RealPoint(0))), 1, [(0, 1, 1)])


def test_build_sigma_rejects_entries_outside_upper_blocks():
    morse = MorseSpec((ConjugatePair(0), RealPoint(1)))
    with pytest.raises(ValueError, match="block diagonal"):
        build_sigma(morse, 1, [(1, 0, 1)])  # inside the pair block
    with pytest.raises(ValueError, match="block diagonal"):
        build_sigma(morse, 1, [(2, 0, 1)])  # below the diagonal


def test_build_sigma_rejects_bad_morse_index():
    with pytest.raises(ValueError, match="Morse index"):
        build_sigma(MorseSpec((RealPoint(2),)), 1, [])


def test_derive_sigma_tilde_a1_minimum():
    lat = ThimbleLattice(1, IntMatrix.from_rows([[2]]))
    conj = build_sigma(MorseSpec((RealPoint(0),)), 1, [])
    report = derive_sigma_tilde(conj, lat)
    assert report.matrix == IntMatrix.from_rows([[-1]])
    assert report.involution and report.lower_block_triangular
    assert report.consistent


def test_derive_sigma_tilde_rank_zero():
    lat = ThimbleLattice(1, IntMatrix(()))
    conj = build_sigma(MorseSpec(()), 1, [])
    assert derive_sigma_tilde(conj, lat).consistent


def test_derive_sigma_tilde_a2_diag_verdict():
    # diag(1, -1) on the A2 lattice: the companion fails both properties
    conj = ConjugationData(IntMatrix.diagonal([1, -1]),
                           MorseSpec((RealPoint(0), RealPoint(1))))
    report = derive_sigma_tilde(conj, a2_lat())
    assert report.matrix == IntMatrix.from_rows([[0, -1], [-1, 1]])
    assert not report.involution
    assert not report.lower_block_triangular


def test_derive_sigma_tilde_rank_mismatch():
    conj = build_sigma(MorseSpec((RealPoint(0),)), 1, [])
    with pytest.raises(ValueError, match="rank"):
        derive_sigma_tilde(conj, a2_lat())


def test_var_sigma_form_examples():
    lat1 = ThimbleLattice(1, IntMatrix.from_rows([[2]]))
    conj1 = build_sigma(MorseSpec((RealPoint(0),)), 1, [])
    form = var_sigma_form(lat1, conj1)
    assert form == IntMatrix.from_rows([[-1]])
    assert exact_signature(form).sgn == -1

    # consistent two-real-point instance: upper sigma entry equals the coupling
    lat2 = a2_lat()
    conj2 = build_sigma(MorseSpec((RealPoint(0), RealPoint(1))), 1, [(0, 1, -1)])
    form2 = var_sigma_form(lat2, conj2)
    assert form2 == IntMatrix.diagonal([-1, 1])
    assert exact_signature(form2).sgn == 0

    # conjugate pair at odd parity: forced block shape, signature zero
    g = 1
    lat3 = ThimbleLattice(1, IntMatrix.from_rows([[2, g], [g, 2]]))
    conj3 = build_sigma(MorseSpec((ConjugatePair(g),)), 1, [])
    form3 = var_sigma_form(lat3, conj3)
    assert form3 == IntMatrix.from_rows([[-g, -1], [-1, 0]])
    assert exact_signature(form3).sgn == 0


def test_var_sigma_form_rejects_inconsistent():
    conj = ConjugationData(IntMatrix.diagonal([1, -1]),
                           MorseSpec((RealPoint(0), RealPoint(1))))
    with pytest.raises(ValueError, match="inconsistent"):
        var_sigma_form(a2_lat(), conj)


def test_block_structure_check_positive_cases():
    lat1 = ThimbleLattice(1, IntMatrix.from_rows([[2]]))
    conj1 = build_sigma(MorseSpec((RealPoint(0),)), 1, [])
    assert block_diagonal_structure_check(lat1, conj1) is None
    conj2 = build_sigma(MorseSpec((RealPoint(0), RealPoint(1))), 1, [(0, 1, -1)])
    assert block_diagonal_structure_check(a2_lat(), conj2) is None
    lat3 = ThimbleLattice(1, IntMatrix.from_rows([[2, 1], [1, 2]]))
    conj3 = build_sigma(MorseSpec((ConjugatePair(1),)), 1, [])
    assert block_diagonal_structure_check(lat3, conj3) is None
    lat0 = ThimbleLattice(1, IntMatrix(()))
    conj0 = build_sigma(MorseSpec(()), 1, [])
    assert block_diagonal_structure_check(lat0, conj0) is None


def test_block_structure_check_locates_corruption():
    # involution still holds with upper entry 5, but consistency breaks
    conj = build_sigma(MorseSpec((RealPoint(0), RealPoint(1))), 1, [(0, 1, 5)])
    report = block_diagonal_structure_check(a2_lat(), conj)
    assert report is not None and "inconsistent" in report


def test_block_structure_check_wrong_pairing_number():
    lat = ThimbleLattice(1, IntMatrix.from_rows([[2, 1], [1, 2]]))
    conj = build_sigma(MorseSpec((ConjugatePair(7),)), 1, [])
    report = block_diagonal_structure_check(lat, conj)
    assert report is not None and "pair block" in report


def test_generator_is_deterministic():
    a = generate_consistent_instance(404, 6, 3)
    b = generate_consistent_instance(404, 6, 3)
    assert a[0].gram == b[0].gram
    assert a[1].sigma == b[1].sigma
    assert a[1].morse == b[1].morse


def test_generator_output_is_always_structurally_good():
    for seed in range(40):
        parity = 1 + seed % 4
        lat, conj = generate_consistent_instance(seed, 7, parity)
        assert validate_lattice(lat) is None
        assert block_diagonal_structure_check(lat, conj) is None
        assert derive_sigma_tilde(conj, lat).consistent
        sig = exact_signature(var_sigma_form(lat, conj))
        assert sig.sgn == signature_by_blocks(lat, conj)


def test_generator_reaches_the_minimum_instance_at_rank_one():
    seen = set()
    for seed in range(60):
        lat, conj = generate_consistent_instance(seed, 1, 1)
        if lat.nu == 1:
            seen.add(conj.sigma[0, 0])
            assert lat.gram == IntMatrix.from_rows([[2]])
    assert 1 in seen  # the minimum: sigma = [[1]]


def test_generator_rank_zero_bound():
    lat, conj = generate_consistent_instance(9, 0, 2)
    assert lat.nu == 0 and conj.nu == 0


def test_monodromy_split_closure_on_consistent_instances():
    # sigma * sigma_tilde recovers the monodromy, and the companion is an
    # involution, on every consistent instance
    from vanlat.basis import monodromy
    for seed in range(30):
        parity = 1 + seed % 5
        lat, conj = generate_consistent_instance(seed, 7, parity)
        report = derive_sigma_tilde(conj, lat)
        assert conj.sigma * report.matrix == monodromy(lat)
        assert report.matrix * report.matrix == IntMatrix.identity(lat.nu)
