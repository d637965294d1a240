"""Command-line front end.

Subcommands: encrypt, validate, scan-blocks, types, goursat, order,
verdict, selftest.  Reports echo the seed and caps in a header and are
byte-stable for a fixed command line: anything nondeterministic
(timings) goes to stderr, never into the report body.

Exit codes: 0 clean, 2 a certified invariant partition was found,
3 inconclusive verdict, 1 usage or I/O errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

import numpy as np

from . import __version__, boxtypes, cipher, goursat, groups, perms, verify
from .cipher import CipherSpec

MATERIALIZE_CAP_LOG2 = 24
CHAIN_CAP_LOG2 = 12


def _hex(value: int, n: int) -> str:
    return format(value, f"0{(n + 3) // 4}x")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="roundgroup",
        description="round-function group analysis of a GOST-like "
                    "Feistel cipher")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, spec_required=True):
        if spec_required:
            p.add_argument("--spec", required=True,
                           help="cipher spec file (JSON)")
        p.add_argument("--seed", type=int, default=0,
                       help="64-bit RNG seed (default 0)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-degree", type=int,
                       default=1 << MATERIALIZE_CAP_LOG2,
                       help="refuse to materialize beyond this many states")

    p = sub.add_parser("encrypt", help="apply rounds to hex state pairs")
    add_common(p)
    p.add_argument("--keys", help="round key file; each line is one hex "
                   "word (keyed round) or four hex words k1 k2 h1 h2 "
                   "(translate-swap-translate round); no file means a "
                   "single plain swap")
    p.add_argument("--input", help="state file, two hex words per line "
                   "(default stdin)")
    p.add_argument("--inverse", action="store_true",
                   help="apply the inverse of the round sequence")

    p = sub.add_parser("validate", help="structural and scope flags")
    add_common(p)

    p = sub.add_parser("scan-blocks",
                       help="scan all modular subgroups for blocks")
    add_common(p)

    p = sub.add_parser("types", help="box types of subgroups and their "
                       "mixing-map images")
    add_common(p)

    p = sub.add_parser("goursat", help="enumerate subgroups of the "
                       "state translation group")
    add_common(p, spec_required=False)
    p.add_argument("--spec", help="take n from this spec file")
    p.add_argument("--n", type=int, help="word width (alternative to --spec)")
    p.add_argument("--list", action="store_true",
                   help="print every triple, not just the count")
    p.add_argument("--check", action="store_true",
                   help="cross-check against brute force (n <= 3)")

    p = sub.add_parser("order", help="exact order of the generated group")
    add_common(p)

    p = sub.add_parser("verdict", help="run the full verification pipeline")
    add_common(p)
    p.add_argument("--budget", type=int, default=10_000,
                   help="giant-witness trial budget (default 10000)")
    p.add_argument("--word-len", type=int, default=32,
                   help="witness word length (default 32)")

    p = sub.add_parser("selftest", help="internal invariant suite at "
                       "toy sizes")
    add_common(p, spec_required=False)

    return parser


def load_spec_arg(args) -> CipherSpec:
    spec = cipher.load_spec(args.spec)
    if (1 << (2 * spec.n)) > args.max_degree and args.command in (
            "scan-blocks", "order", "verdict"):
        raise ValueError(
            f"degree 2**{2 * spec.n} exceeds --max-degree {args.max_degree}")
    return spec


def header_lines(args, spec: CipherSpec | None) -> list[str]:
    lines = [f"tool: roundgroup {__version__}"]
    if spec is not None:
        lines.append(f"spec: {args.spec} sha256={spec.digest()}")
        lines.append(f"parameters: n={spec.n} m={spec.m} "
                     f"delta={spec.delta} r={spec.r}")
    lines.append(f"seed: {args.seed}")
    lines.append(f"caps: materialize=2^{MATERIALIZE_CAP_LOG2} "
                 f"chain-degree=2^{CHAIN_CAP_LOG2} "
                 f"max-degree={args.max_degree}")
    return lines


def header_dict(args, spec: CipherSpec | None) -> dict:
    out = {"tool": f"roundgroup {__version__}", "seed": args.seed,
           "caps": {"materialize_log2": MATERIALIZE_CAP_LOG2,
                    "chain_degree_log2": CHAIN_CAP_LOG2,
                    "max_degree": args.max_degree}}
    if spec is not None:
        out["spec"] = {"path": args.spec, "sha256": spec.digest(),
                       "n": spec.n, "m": spec.m, "delta": spec.delta,
                       "r": spec.r}
    return out


def emit(args, text_lines: list[str], data: dict) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# encrypt


def parse_states(stream, n: int) -> list[tuple[int, int]]:
    out = []
    for lineno, line in enumerate(stream, 1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 2:
            raise ValueError(f"state line {lineno}: need two hex words")
        x1, x2 = (int(p, 16) for p in parts)
        if x1 >= (1 << n) or x2 >= (1 << n):
            raise ValueError(f"state line {lineno}: word out of range")
        out.append((x1, x2))
    return out


def parse_keys(path, n: int) -> list[tuple]:
    rounds: list[tuple] = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            parts = [int(p, 16) for p in body.split()]
            if any(p >= (1 << n) for p in parts):
                raise ValueError(f"key line {lineno}: word out of range")
            if len(parts) == 1:
                rounds.append(("keyed", parts[0]))
            elif len(parts) == 4:
                rounds.append(("general", (parts[0], parts[1]),
                               (parts[2], parts[3])))
            else:
                raise ValueError(
                    f"key line {lineno}: need one or four hex words")
    return rounds


def apply_rounds(spec: CipherSpec, rounds: list[tuple],
                 st: tuple[int, int], inverse: bool) -> tuple[int, int]:
    n = spec.n
    if not inverse:
        for rnd in rounds:
            if rnd[0] == "keyed":
                st = cipher.gost_round(spec, rnd[1], st)
            else:
                st = cipher.generalized_round(spec, rnd[1], rnd[2], st)
        return st
    from . import words
    for rnd in reversed(rounds):
        if rnd[0] == "keyed":
            k = rnd[1]
            st = cipher.rho_apply((k, 0), st, n)
            st = cipher.sigma_inverse_apply(spec, st)
            st = cipher.rho_apply((0, words.neg_mod(k, n)), st, n)
        else:
            k, h = rnd[1], rnd[2]
            st = cipher.rho_apply((words.neg_mod(h[0], n),
                                   words.neg_mod(h[1], n)), st, n)
            st = cipher.sigma_inverse_apply(spec, st)
            st = cipher.rho_apply((words.neg_mod(k[0], n),
                                   words.neg_mod(k[1], n)), st, n)
    return st


def cmd_encrypt(args) -> int:
    spec = cipher.load_spec(args.spec)
    rounds = parse_keys(args.keys, spec.n) if args.keys else [
        ("general", (0, 0), (0, 0))]
    if args.input:
        with open(args.input) as fh:
            states = parse_states(fh, spec.n)
    else:
        states = parse_states(sys.stdin, spec.n)
    for st in states:
        out = apply_rounds(spec, rounds, st, args.inverse)
        print(f"{_hex(out[0], spec.n)} {_hex(out[1], spec.n)}")
    return 0


# ---------------------------------------------------------------------------
# validate


def cmd_validate(args) -> int:
    spec = load_spec_arg(args)
    val = cipher.validate_spec(spec)
    flags = [("conforming", val.conforming), ("bijective", val.bijective),
             ("theorem-scope", val.theorem_scope),
             ("gost-parameters", val.gost_parameters)]
    lines = header_lines(args, spec)
    lines.append("-- validation --")
    for name, ok in flags:
        lines.append(f"{name}: {'yes' if ok else 'no'}")
    for note in val.notes:
        lines.append(f"note: {note}")
    data = header_dict(args, spec)
    data["validation"] = {name.replace("-", "_"): ok for name, ok in flags}
    data["validation"]["notes"] = list(val.notes)
    emit(args, lines, data)
    return 0


# ---------------------------------------------------------------------------
# scan-blocks


def describe_candidate(c: verify.BlockCandidate, n: int) -> str:
    size = c.triple.size
    blocks = (1 << (2 * n)) // size
    status = "certified" if c.certified else "refuted-by-partition-check"
    return (f"block {c.triple.describe()} size={size} "
            f"blocks={blocks} {status}")


def cmd_scan_blocks(args) -> int:
    spec = load_spec_arg(args)
    gens = perms.standard_generators(spec)
    t0 = time.monotonic()
    trans = verify.transitivity_check(gens)
    scan = verify.block_scan(spec, gens)
    elapsed = time.monotonic() - t0
    lines = header_lines(args, spec)
    lines.append("-- block scan --")
    lines.append(f"transitive: {'yes' if trans.passed else 'no'} "
                 f"(orbit {trans.orbit_size} of {trans.degree})")
    lines.append(f"subgroups tested: {scan.subgroups_tested}")
    lines.append(f"forced shift: (0, 0x{_hex(scan.shift, spec.n)})")
    if scan.empty:
        lines.append("result: empty (no invariant subgroup-coset "
                     "partition exists)")
        if trans.passed:
            lines.append("primitive: yes")
    else:
        for c in scan.candidates:
            lines.append(describe_candidate(c, spec.n))
        lines.append(f"result: {len(scan.certified)} certified of "
                     f"{len(scan.candidates)} candidates")
    data = header_dict(args, spec)
    data["scan"] = {
        "transitive": trans.passed,
        "subgroups_tested": scan.subgroups_tested,
        "shift_hex": _hex(scan.shift, spec.n),
        "candidates": [
            {"triple": list(c.triple.to_tuple()), "size": c.triple.size,
             "certified": c.certified} for c in scan.candidates],
        "primitive": trans.passed and not scan.certified,
    }
    emit(args, lines, data)
    print(f"timing: scan {elapsed:.2f}s", file=sys.stderr)
    return 2 if scan.certified else 0


# ---------------------------------------------------------------------------
# types


def cmd_types(args) -> int:
    spec = load_spec_arg(args)
    n, m, delta = spec.n, spec.m, spec.delta
    lines = header_lines(args, spec)
    lines.append("-- box types --")
    rows = []
    for q in range(1, n):
        dtype = boxtypes.subgroup_type(q, m, delta)
        image_type = boxtypes.type_of(boxtypes.s_image(spec, q), m, delta)
        image_str = str(image_type) if image_type is not None else "none"
        verdict = "same" if image_type == dtype else "changed"
        rows.append((q, str(dtype), image_str, verdict))
        lines.append(f"q={q}: D={dtype} DS={image_str} [{verdict}]")
    tv = boxtypes.s_image_type_violations(spec)
    cv = boxtypes.s_image_coset_violations(spec)
    lines.append(f"type violations: {tv if tv else 'none'}")
    lines.append(f"coset violations: {cv if cv else 'none'}")
    data = header_dict(args, spec)
    data["types"] = {"rows": [{"q": q, "subgroup": d, "image": i,
                               "verdict": v} for q, d, i, v in rows],
                     "type_violations": tv, "coset_violations": cv}
    emit(args, lines, data)
    return 0


# ---------------------------------------------------------------------------
# goursat


def cmd_goursat(args) -> int:
    if args.n is not None:
        n = args.n
    elif args.spec:
        n = cipher.load_spec(args.spec).n
    else:
        raise ValueError("goursat needs --n or --spec")
    if not 1 <= n <= 16:
        raise ValueError("subgroup enumeration supported for 1 <= n <= 16")
    triples = goursat.enumerate_subgroups(n)
    lines = [f"tool: roundgroup {__version__}", f"n: {n}",
             f"subgroups: {len(triples)}"]
    data = {"tool": f"roundgroup {__version__}", "n": n,
            "count": len(triples)}
    if args.check:
        if n > 3:
            raise ValueError("--check needs n <= 3")
        brute = goursat.brute_force_subgroups(n)
        match = {goursat.member_set(t) for t in triples} == brute
        lines.append(f"brute-force sets: {len(brute)} "
                     f"({'match' if match else 'MISMATCH'})")
        data["brute_force_count"] = len(brute)
        data["brute_force_match"] = match
        if not match:
            emit(args, lines, data)
            return 1
    if args.list:
        for t in triples:
            lines.append(f"  {t.describe()} size={t.size}")
        data["triples"] = [list(t.to_tuple()) for t in triples]
    emit(args, lines, data)
    return 0


# ---------------------------------------------------------------------------
# order


def cmd_order(args) -> int:
    spec = load_spec_arg(args)
    degree = 1 << (2 * spec.n)
    if degree > (1 << CHAIN_CAP_LOG2):
        raise ValueError(f"exact order needs degree <= 2^{CHAIN_CAP_LOG2}; "
                         f"this spec has degree 2^{2 * spec.n}")
    gens = perms.standard_generators(spec)
    t0 = time.monotonic()
    chain = groups.schreier_sims(gens, np.random.default_rng(args.seed))
    elapsed = time.monotonic() - t0
    order = chain.order
    lines = header_lines(args, spec)
    lines.append("-- group order --")
    lines.append(f"degree: {degree}")
    lines.append(f"order: {order}")
    half = math.factorial(degree) // 2
    if order == half:
        lines.append("identification: alternating group of the full "
                     "state set")
    elif order == 2 * half:
        lines.append("identification: symmetric group of the full state set")
    else:
        lines.append(f"identification: proper subgroup "
                     f"(index {2 * half // order} in the symmetric group)")
    lines.append(f"certificate: {chain.certificate}")
    lines.append(f"base length: {len(chain.base)}")
    data = header_dict(args, spec)
    data["order"] = {"degree": degree, "order": str(order),
                     "certificate": chain.certificate,
                     "base_length": len(chain.base),
                     "is_alternating": order == half,
                     "is_symmetric": order == 2 * half}
    emit(args, lines, data)
    print(f"timing: chain {elapsed:.2f}s", file=sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# verdict


def verdict_lines(v: verify.Verdict, spec: CipherSpec) -> list[str]:
    n = spec.n
    lines = ["-- checks --"]
    s = v.parity.signs
    lines.append(f"parity: {'PASS' if v.parity.passed else 'FAIL'} "
                 f"rho(1,0)={s[0]:+d} rho(0,1)={s[1]:+d} swap={s[2]:+d}")
    lines.append(f"transitivity: "
                 f"{'PASS' if v.transitivity.passed else 'FAIL'} "
                 f"orbit {v.transitivity.orbit_size} of "
                 f"{v.transitivity.degree}")
    if v.scan.empty:
        lines.append(f"block-scan: EMPTY {v.scan.subgroups_tested} "
                     f"subgroups, shift (0, 0x{_hex(v.scan.shift, n)})")
    else:
        lines.append(f"block-scan: {len(v.scan.certified)} certified of "
                     f"{len(v.scan.candidates)} candidates from "
                     f"{v.scan.subgroups_tested} subgroups")
        for c in v.scan.candidates:
            lines.append("  " + describe_candidate(c, n))
    lines.append(f"diagonal-collision: "
                 f"{'PASS' if v.diagonal.passed else 'FAIL'} "
                 f"S(0)=0x{_hex(v.diagonal.s_at_zero, n)} "
                 f"S(top)=0x{_hex(v.diagonal.s_at_top, n)}")
    lines.append(f"affine-order-bound: "
                 f"{'EXCLUDED' if v.affine.excluded else 'INCONCLUSIVE'} "
                 f"ceil(log2 n)+2={v.affine.bound} vs n={v.affine.n}")
    w = v.wreath
    lines.append(f"wreath-top-brick: "
                 f"{'EXCLUDED' if w.excluded else 'NOT-EXCLUDED'} "
                 f"distinct={'yes' if w.distinct_images else 'no'} "
                 f"top-brick S(0)=0x{w.top_slice_zero:x} "
                 f"S(top)=0x{w.top_slice_top:x}")
    lines.append(f"projective-line: "
                 f"{'EXCLUDED' if v.psl.excluded else 'NOT-EXCLUDED'} "
                 f"{(1 << (2 * n)) - 1} = {v.psl.factor_minus} * "
                 f"{v.psl.factor_plus}, gcd {v.psl.gcd_value}")
    attempted = (v.validation.bijective and v.parity.passed
                 and v.transitivity.passed and v.scan.empty)
    if v.witness is not None:
        lines.append(f"giant-witness: FOUND prime={v.witness.prime} "
                     f"trials={v.witness.trials_used} "
                     f"word={v.witness.word_hex}")
    elif attempted:
        lines.append(f"giant-witness: NONE within budget {v.budget}")
    else:
        lines.append("giant-witness: SKIPPED (gated by earlier checks)")
    lines.append(f"conclusion: {v.conclusion}")
    return lines


def verdict_dict(v: verify.Verdict, spec: CipherSpec) -> dict:
    n = spec.n
    out = {
        "budget": v.budget,
        "word_len": v.word_len,
        "validation": {
            "conforming": v.validation.conforming,
            "bijective": v.validation.bijective,
            "theorem_scope": v.validation.theorem_scope,
            "notes": list(v.validation.notes),
        },
        "parity": {"signs": list(v.parity.signs),
                   "passed": v.parity.passed},
        "transitivity": {"orbit_size": v.transitivity.orbit_size,
                         "degree": v.transitivity.degree,
                         "passed": v.transitivity.passed},
        "block_scan": {
            "subgroups_tested": v.scan.subgroups_tested,
            "shift_hex": _hex(v.scan.shift, n),
            "candidates": [
                {"triple": list(c.triple.to_tuple()),
                 "size": c.triple.size, "certified": c.certified}
                for c in v.scan.candidates],
        },
        "primitive": v.primitive,
        "diagonal": {"passed": v.diagonal.passed,
                     "s_at_zero_hex": _hex(v.diagonal.s_at_zero, n),
                     "s_at_top_hex": _hex(v.diagonal.s_at_top, n)},
        "affine": {"excluded": v.affine.excluded,
                   "bound": v.affine.bound, "n": v.affine.n},
        "wreath": {"excluded": v.wreath.excluded,
                   "distinct_images": v.wreath.distinct_images,
                   "top_slice_zero_hex": f"{v.wreath.top_slice_zero:x}",
                   "top_slice_top_hex": f"{v.wreath.top_slice_top:x}"},
        "psl": {"excluded": v.psl.excluded,
                "factors": [v.psl.factor_minus, v.psl.factor_plus],
                "gcd": v.psl.gcd_value},
        "witness": None,
        "conclusion": v.conclusion,
    }
    if v.witness is not None:
        out["witness"] = {"prime": v.witness.prime,
                          "trials_used": v.witness.trials_used,
                          "word_hex": v.witness.word_hex,
                          "other_lcm": str(v.witness.other_lcm)}
    return out


def cmd_verdict(args) -> int:
    spec = load_spec_arg(args)
    t0 = time.monotonic()
    v = verify.full_verdict(spec, seed=args.seed, budget=args.budget,
                            word_len=args.word_len)
    elapsed = time.monotonic() - t0
    lines = header_lines(args, spec)
    lines.append(f"budget: {v.budget}  word-len: {v.word_len}")
    lines.extend(verdict_lines(v, spec))
    data = header_dict(args, spec)
    data["verdict"] = verdict_dict(v, spec)
    emit(args, lines, data)
    print(f"timing: verdict {elapsed:.2f}s", file=sys.stderr)
    return v.exit_code


# ---------------------------------------------------------------------------
# selftest


def selftest_checks():
    from . import words

    def words_basics():
        for n in (2, 3, 4):
            top = words.involution(n)
            for x in range(1 << n):
                if words.add_mod(x, top, n) != x ^ top:
                    return False
                for r in range(n):
                    back = words.rotate_left(
                        words.rotate_left(x, r, n), n - r, n)
                    if back != x:
                        return False
        return True

    def feistel_inverse():
        rng = np.random.default_rng(0)
        for bij in (True, False):
            spec = cipher.random_spec(2, 2, 2, rng, bij)
            for idx in range(256):
                st = (idx & 15, idx >> 4)
                if cipher.sigma_inverse_apply(
                        spec, cipher.sigma_apply(spec, st)) != st:
                    return False
        return True

    def round_decomposition():
        rng = np.random.default_rng(1)
        spec = cipher.random_spec(2, 2, 2, rng)
        from . import words as w
        for k in range(16):
            for idx in range(256):
                st = (idx & 15, idx >> 4)
                direct = cipher.gost_round(spec, k, st)
                st2 = cipher.rho_apply((0, k), st, 4)
                st2 = cipher.sigma_apply(spec, st2)
                st2 = cipher.rho_apply((w.neg_mod(k, 4), 0), st2, 4)
                if direct != st2:
                    return False
        return True

    def goursat_brute_force():
        for n in (1, 2, 3):
            enumerated = {goursat.member_set(t)
                          for t in goursat.enumerate_subgroups(n)}
            if enumerated != goursat.brute_force_subgroups(n):
                return False
        return goursat.count_subgroups(1) == 5

    def subgroup_types():
        for n, m, delta in ((4, 2, 2), (6, 2, 3), (8, 2, 4)):
            for q in range(n + 1):
                materialized = boxtypes.type_of(
                    boxtypes.subgroup_members_array(q, n), m, delta)
                if materialized != boxtypes.subgroup_type(q, m, delta):
                    return False
        return True

    def translation_lemmas():
        rng = np.random.default_rng(2)
        for q in range(9):
            members = boxtypes.subgroup_members_array(q, 8)
            for _ in range(25):
                v = int(rng.integers(0, 256))
                if not boxtypes.xor_translate_keeps_type(members, v, 2, 4):
                    return False
                if not boxtypes.modular_translate_keeps_type(q, v, 8, 2, 4):
                    return False
        return True

    def scan_vs_generic_blocks():
        specs = [
            CipherSpec(4, 2, 2, 0, cipher.identity_sboxes(2, 2)),
            CipherSpec(4, 1, 4, 0, cipher.identity_sboxes(4, 1)),
        ]
        rng = np.random.default_rng(3)
        for r in (0, 1, 2, 3):
            specs.append(cipher.random_spec(2, 2, r, rng))
        specs.append(cipher.random_spec(2, 2, 2, rng, bijective=False))
        return all(verify.atkinson_agrees_with_scan(s) for s in specs)

    def chain_known_orders():
        rng = np.random.default_rng(4)
        c4 = np.array([1, 2, 3, 0], dtype=np.int64)
        flip = np.array([3, 2, 1, 0], dtype=np.int64)
        if groups.schreier_sims([c4], rng).order != 4:
            return False
        if groups.schreier_sims([c4, flip], rng).order != 8:
            return False
        trans = [perms.rho_perm((1, 0), 2), perms.rho_perm((0, 1), 2)]
        return groups.schreier_sims(trans, rng).order == 16

    def generator_parity():
        rng = np.random.default_rng(5)
        for n, m in ((2, 1), (3, 1), (4, 2)):
            spec = cipher.random_spec(m, n // m, min(1, n - 1), rng)
            if any(perms.sign(g) != 1
                   for g in perms.standard_generators(spec)):
                return False
        return True

    return [("word arithmetic", words_basics),
            ("feistel inverse", feistel_inverse),
            ("round decomposition", round_decomposition),
            ("subgroup enumeration vs brute force", goursat_brute_force),
            ("subgroup types", subgroup_types),
            ("translation lemmas", translation_lemmas),
            ("scan vs generic blocks at degree 256", scan_vs_generic_blocks),
            ("chain orders", chain_known_orders),
            ("generator parity", generator_parity)]


def cmd_selftest(args) -> int:
    failures = 0
    lines = [f"tool: roundgroup {__version__}", "-- selftest --"]
    results = []
    for name, fn in selftest_checks():
        ok = bool(fn())
        results.append({"name": name, "ok": ok})
        lines.append(f"{'ok' if ok else 'FAIL'}: {name}")
        if not ok:
            failures += 1
    lines.append(f"selftest: {'PASS' if failures == 0 else 'FAIL'} "
                 f"({len(results) - failures}/{len(results)})")
    emit(args, lines, {"selftest": results,
                       "passed": failures == 0})
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------


COMMANDS = {
    "encrypt": cmd_encrypt,
    "validate": cmd_validate,
    "scan-blocks": cmd_scan_blocks,
    "types": cmd_types,
    "goursat": cmd_goursat,
    "order": cmd_order,
    "verdict": cmd_verdict,
    "selftest": cmd_selftest,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
