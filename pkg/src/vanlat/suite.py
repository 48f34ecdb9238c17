"""Seeded verification runs behind ``vanlat verify``.

Seven structural identities are exercised round-robin over a budget of
random instances.  Instance evaluation is independent per index and could
run in parallel; it runs sequentially so the report is deterministic for
a given (seed, count, rank bound).
"""

import random
from dataclasses import dataclass

from .basis import apply_braid_word, monodromy
from .conjugation import (block_diagonal_structure_check,
                          generate_consistent_instance, signature_by_blocks,
                          var_sigma_form)
from .gen import (attach_cycles, flip_last_sign, random_braid_word,
                  random_icis_instance, random_lattice)
from .index import (IcisInstance, LevelData, sign_independence_check, gradient_index,
                    telescoped_index, level_index_sum, cycle_index_sum)
from .instfile import InstanceDocument, serialize_instance
from .lattice import SignVector
from .signature import exact_signature
from .variation import (check_monodromy_relation, check_s_relation,
                        var_inverse_as_operator_after_braid)

CHECK_NAMES = (
    "s-relation",
    "monodromy-relation",
    "braid-invariance",
    "symmetric-nondegenerate",
    "block-form",
    "cycle-route-agreement",
    "telescoping",
)


@dataclass
class VerificationResult:
    ok: bool
    lines: list
    counterexample: str | None = None


def _single_level_doc(lat, conj, n=None):
    parity = lat.parity
    n = parity if n is None else n
    level = LevelData(0, lat, conj)
    inst = IcisInstance(n, 0, SignVector((1,)), (level,))
    return serialize_instance(InstanceDocument(inst))


def _check_lattice_identities(rng, rank_bound, which):
    parity = rng.choice((1, 2, 3, 4, 5))
    nu = rng.randint(0, rank_bound)
    lat = random_lattice(rng, nu, parity)
    if which == "s-relation":
        return check_s_relation(lat), lat, None
    return check_monodromy_relation(lat), lat, None


def run_verification(seed: int, count: int, rank_bound: int) -> VerificationResult:
    rng = random.Random(seed)
    passed = {name: 0 for name in CHECK_NAMES}
    lines = []
    for k in range(count):
        name = CHECK_NAMES[k % len(CHECK_NAMES)]
        problem = None
        witness = None
        if name in ("s-relation", "monodromy-relation"):
            problem, lat, _ = _check_lattice_identities(rng, rank_bound, name)
            if problem:
                witness = _single_level_doc(lat, None)
        elif name == "braid-invariance":
            parity = rng.choice((1, 2, 3, 4))
            nu = rng.randint(0, rank_bound)
            lat = random_lattice(rng, nu, parity)
            word = random_braid_word(rng, nu)
            problem = var_inverse_as_operator_after_braid(lat, word)
            if problem is None:
                new_lat, change = apply_braid_word(lat, word)
                p = change.matrix
                lhs = monodromy(new_lat)
                rhs = p.unimodular_inverse() * monodromy(lat) * p
                if lhs != rhs:
                    problem = "monodromy not conjugation-covariant under '%s'" % word
            if problem:
                witness = _single_level_doc(lat, None)
        elif name in ("symmetric-nondegenerate", "block-form"):
            parity = rng.choice((1, 2, 3, 4))
            lat, conj = generate_consistent_instance(
                rng.randrange(2 ** 32), rank_bound, parity)
            if name == "symmetric-nondegenerate":
                try:
                    form = var_sigma_form(lat, conj)
                    if not form.is_symmetric() or form.det() == 0:
                        problem = "form not symmetric and unimodular"
                except (ValueError, AssertionError) as e:
                    problem = str(e)
            else:
                problem = block_diagonal_structure_check(lat, conj)
                if problem is None:
                    form = var_sigma_form(lat, conj)
                    if exact_signature(form).sgn != signature_by_blocks(lat, conj):
                        problem = "signature disagrees with block closed form"
            if problem:
                witness = _single_level_doc(lat, conj)
        elif name == "cycle-route-agreement":
            parity = rng.choice((1, 3, 5))
            lat, conj = generate_consistent_instance(
                rng.randrange(2 ** 32), rank_bound, parity)
            cycles = attach_cycles(lat, conj, pad=rng.choice((0, 0, 1)))
            level = LevelData(0, lat, conj, cycles)
            s = rng.choice((1, -1))
            t2 = level_index_sum(level, parity, s)
            try:
                t3 = cycle_index_sum(level, s)
                if t2 != t3:
                    problem = "cycle route gives %d, thimble route %d" % (t3, t2)
            except ValueError as e:
                problem = str(e)
            if problem:
                witness = _single_level_doc(lat, conj)
        else:  # telescoping, plus the matched sign-flip comparison
            n = rng.choice((1, 2, 3))
            p = rng.choice((0, 1, 2))
            inst = random_icis_instance(rng.randrange(2 ** 32), n, p,
                                        max(rank_bound, 0),
                                        real_only_level0=True)
            if telescoped_index(inst) != gradient_index(inst):
                problem = "telescoped recursion disagrees with closed formula"
            else:
                problem = sign_independence_check([inst, flip_last_sign(inst)])
            if problem:
                witness = serialize_instance(InstanceDocument(inst))
        if problem:
            lines.append("FAIL %s (instance %d): %s" % (name, k, problem))
            return VerificationResult(False, lines, witness)
        passed[name] += 1
    for name in CHECK_NAMES:
        lines.append("%s: %d/%d ok" % (name, passed[name], passed[name]))
    lines.append("PASS (%d instances)" % count)
    return VerificationResult(True, lines)
