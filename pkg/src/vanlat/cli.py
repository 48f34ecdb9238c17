"""Command-line interface.

Subcommands: validate, compute, braid, verify, gen.  Exit codes: 0 on
success, 1 when a validation or verification fails, 2 for usage, parse,
or unsupported-request errors.  All output is deterministic given the
arguments (and seed, where one applies).
"""

import argparse
import sys

from .basis import apply_braid_word, monodromy, parse_braid_word
from .conjugation import derive_sigma_tilde, var_sigma_form
from .index import (EvenParityError, IcisInstance, LevelData, gradient_index,
                    level_index_sum, cycle_index_sum)
from .instfile import (InstanceDocument, InstanceFormatError, load_instance,
                       save_instance, serialize_instance)
from .gen import random_icis_instance
from .lattice import validate_lattice
from .signature import exact_signature
from .suite import run_verification
from .variation import var_inverse

MONODROMY_ORDER_BOUND = 24


def _monodromy_order(h):
    power = h
    for k in range(1, MONODROMY_ORDER_BOUND + 1):
        if power == h.identity(h.nrows):
            return k
        power = power * h
    return None


def cmd_validate(args):
    doc = load_instance(args.path)
    inst = doc.instance
    failures = 0
    for level in inst.levels:
        bad = validate_lattice(level.lattice)
        if bad:
            print("level %d: FAIL lattice: %s" % (level.i, bad))
            failures += 1
            continue
        print("level %d: lattice ok (rank %d, parity %d)"
              % (level.i, level.lattice.nu, level.lattice.parity))
        if level.conj is None:
            print("level %d: no conjugation data" % level.i)
            continue
        report = derive_sigma_tilde(level.conj, level.lattice)
        if report.consistent:
            print("level %d: conjugation ok (companion involution, "
                  "block lower triangular)" % level.i)
        else:
            why = []
            if not report.involution:
                why.append("companion not an involution")
            if not report.lower_block_triangular:
                why.append("companion not block lower triangular")
            print("level %d: FAIL conjugation: %s" % (level.i, "; ".join(why)))
            failures += 1
    for k, word in enumerate(doc.braid_words):
        top = inst.levels[0].lattice.nu
        bad = next((m for m in word.moves
                    if m.j > (top if m.kind == "f" else top - 1)), None)
        if bad:
            print("braid word %d: FAIL move %s out of range for rank %d"
                  % (k, bad, top))
            failures += 1
        else:
            print("braid word %d: ok (%s)" % (k, word))
    if failures:
        print("FAIL (%d problems)" % failures)
        return 1
    print("ok")
    return 0


def cmd_compute(args):
    doc = load_instance(args.path)
    inst = doc.instance
    levels = inst.levels
    if args.level is not None:
        if not 0 <= args.level <= inst.p:
            print("no level %d in this instance (p = %d)" % (args.level, inst.p),
                  file=sys.stderr)
            return 2
        levels = (inst.levels[args.level],)

    def emit(rendered):
        if len(levels) == 1:
            print(rendered[0][1])
        else:
            for i, text in rendered:
                print("level %d: %s" % (i, text))

    if args.what == "var-inverse":
        emit([(lv.i, str(var_inverse(lv.lattice))) for lv in levels])
    elif args.what == "monodromy":
        emit([(lv.i, str(monodromy(lv.lattice))) for lv in levels])
        if len(levels) == 1:
            order = _monodromy_order(monodromy(levels[0].lattice))
            if order is not None:
                print("verified: monodromy^%d = identity" % order)
            else:
                print("note: no finite order detected (bound %d)"
                      % MONODROMY_ORDER_BOUND)
    elif args.what == "signature":
        def render(lv):
            sig = exact_signature(var_sigma_form(lv.lattice, lv.require_conj()))
            return "%s, sgn = %d" % (sig, sig.sgn)
        emit([(lv.i, render(lv)) for lv in levels])
    elif args.what == "level-sums":
        emit([(lv.i, str(level_index_sum(lv, inst.n, inst.sign_for_level(lv.i))))
              for lv in levels])
    elif args.what == "cycle-sums":
        try:
            rendered = [(lv.i, str(cycle_index_sum(lv, inst.sign_for_level(lv.i))))
                        for lv in levels]
        except EvenParityError as e:
            print("refused: %s" % e, file=sys.stderr)
            print("(see README: the even-parity cone example shows why "
                  "no such formula can exist)", file=sys.stderr)
            return 2
        emit(rendered)
    else:  # index
        print(gradient_index(inst))
    return 0


def cmd_braid(args):
    doc = load_instance(args.path)
    inst = doc.instance
    try:
        word = parse_braid_word(args.word)
    except ValueError as e:
        print("malformed braid word: %s" % e, file=sys.stderr)
        return 2
    target = args.level
    if not 0 <= target <= inst.p:
        print("no level %d in this instance (p = %d)" % (target, inst.p),
              file=sys.stderr)
        return 2
    level = inst.levels[target]
    lat = level.lattice
    for m in word.moves:
        top = lat.nu if m.kind == "f" else lat.nu - 1
        if m.j > top:
            print("move %s out of range for rank %d" % (m, lat.nu),
                  file=sys.stderr)
            return 2
    new_lat, change = apply_braid_word(lat, word)
    dropped = level.conj is not None or level.cycles is not None
    if dropped:
        print("note: dropping basis-bound conjugation/cycle data of level %d"
              % target, file=sys.stderr)
    new_level = LevelData(level.i, new_lat, None, None)
    new_levels = tuple(new_level if lv.i == target else lv
                       for lv in inst.levels)
    new_inst = IcisInstance(inst.n, inst.p, inst.signs, new_levels)
    prov = ["braid word '%s' applied to level %d" % (word, target)]
    if dropped:
        prov.append("conjugation/cycle data of level %d dropped" % target)
    out_doc = InstanceDocument(new_inst, doc.braid_words, doc.expected,
                               tuple(prov))
    text = serialize_instance(out_doc)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print("basis change: %s" % change.matrix)
    else:
        sys.stdout.write(text)
        print("basis change: %s" % change.matrix, file=sys.stderr)
    return 0


def cmd_verify(args):
    print("seed %d, count %d, rank bound %d"
          % (args.seed, args.count, args.rank_bound))
    result = run_verification(args.seed, args.count, args.rank_bound)
    for line in result.lines:
        print(line)
    if not result.ok:
        if result.counterexample:
            out = args.output or "counterexample.vl"
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(result.counterexample)
            print("counterexample written to %s" % out)
        return 1
    return 0


def cmd_gen(args):
    inst = random_icis_instance(args.seed, args.n, args.levels,
                                args.rank_bound, with_cycles=True,
                                real_only_level0=True)
    doc = InstanceDocument(inst, (), {},
                           ("generated with seed %d" % args.seed,))
    if args.output:
        save_instance(doc, args.output)
        print("wrote %s" % args.output)
    else:
        sys.stdout.write(serialize_instance(doc))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="vanlat",
        description="Exact computations with lattices of thimbles: "
                    "distinguished bases, braid moves, variation operators, "
                    "conjugation data, and gradient index formulas.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_val = sub.add_parser("validate", help="check an instance file")
    p_val.add_argument("path")
    p_val.set_defaults(func=cmd_validate)

    p_comp = sub.add_parser("compute", help="print exact values")
    p_comp.add_argument("path")
    p_comp.add_argument("--what", required=True,
                        choices=["var-inverse", "monodromy", "signature",
                                 "index", "level-sums", "cycle-sums"])
    p_comp.add_argument("--level", type=int, default=None,
                        help="restrict to a single level")
    p_comp.set_defaults(func=cmd_compute)

    p_braid = sub.add_parser("braid", help="apply a braid word")
    p_braid.add_argument("path")
    p_braid.add_argument("word", help="tokens like 'a1 A2 f3'")
    p_braid.add_argument("--level", type=int, default=0)
    p_braid.add_argument("--output", default=None)
    p_braid.set_defaults(func=cmd_braid)

    p_ver = sub.add_parser("verify", help="run the seeded identity suite")
    p_ver.add_argument("--seed", type=int, default=20240001)
    p_ver.add_argument("--count", type=int, default=500)
    p_ver.add_argument("--rank-bound", type=int, default=8)
    p_ver.add_argument("--output", default=None,
                       help="where to write a counterexample, if any")
    p_ver.set_defaults(func=cmd_verify)

    p_gen = sub.add_parser("gen", help="generate a consistent instance file")
    p_gen.add_argument("--seed", type=int, default=1)
    p_gen.add_argument("--n", type=int, default=1)
    p_gen.add_argument("--levels", type=int, default=0, metavar="P",
                       help="codimension p (instance has p+1 levels)")
    p_gen.add_argument("--rank-bound", type=int, default=4)
    p_gen.add_argument("--output", default=None)
    p_gen.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InstanceFormatError as e:
        print("parse error: %s" % e, file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print("cannot read %s" % e.filename, file=sys.stderr)
        return 2
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
