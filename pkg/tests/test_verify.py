"""Verifier pipeline: scan soundness, case eliminations, verdicts."""

import numpy as np
import pytest

from roundgroup import cipher, goursat, perms, verify
from roundgroup.cipher import CipherSpec


def seeded_spec(n, m, r, seed, bijective=True):
    rng = np.random.default_rng(seed)
    return cipher.random_spec(m, n // m, r, rng, bijective)


def identity_spec(n, m, r=0):
    return CipherSpec(n, m, n // m, r, cipher.identity_sboxes(n // m, m))


def test_parity_check():
    spec = seeded_spec(4, 2, 2, seed=0)
    chk = verify.parity_check(perms.standard_generators(spec))
    assert chk.signs == (1, 1, 1) and chk.passed


def test_transitivity_check():
    spec = seeded_spec(4, 2, 2, seed=0)
    chk = verify.transitivity_check(perms.standard_generators(spec))
    assert chk.passed and chk.orbit_size == 256
    fixer = np.arange(16, dtype=np.int64)
    assert not verify.transitivity_check([fixer]).passed


def test_scan_empty_on_conforming():
    for seed in range(3):
        spec = seeded_spec(8, 2, 3, seed=seed)
        scan = verify.block_scan(spec)
        assert scan.empty
        assert scan.subgroups_tested == 1513  # 1515 minus trivial and full


def test_scan_identity_control_diagonals():
    for n, m in ((4, 2), (8, 2)):
        spec = identity_spec(n, m)
        scan = verify.block_scan(spec)
        got = sorted(c.triple.to_tuple() for c in scan.candidates)
        assert got == [(q, q, q, q, 1) for q in range(1, n)]
        assert all(c.certified for c in scan.candidates)


def test_scan_shift_is_mixed_zero():
    spec = seeded_spec(8, 2, 4, seed=7)
    scan = verify.block_scan(spec)
    assert scan.shift == cipher.apply_s(spec, 0)


def test_certified_candidates_are_real_partitions():
    spec = identity_spec(4, 2)
    gens = perms.standard_generators(spec)
    scan = verify.block_scan(spec, gens)
    for cand in scan.certified:
        labels = goursat.coset_labels(cand.triple)
        for g in gens:
            assert verify.partition_invariant(labels, g)


def test_partition_invariant_detects_breakage():
    labels = np.array([0, 0, 1, 1])
    keeps = np.array([1, 0, 3, 2])
    breaks = np.array([0, 2, 1, 3])
    assert verify.partition_invariant(labels, keeps)
    assert not verify.partition_invariant(labels, breaks)


def test_scan_agrees_with_generic_blocks_at_degree_256():
    specs = [identity_spec(4, 2), identity_spec(4, 1),
             seeded_spec(4, 2, 2, seed=1), seeded_spec(4, 2, 2, seed=2),
             seeded_spec(4, 1, 1, seed=3),
             seeded_spec(4, 2, 1, seed=4),      # non-conforming rotation
             seeded_spec(4, 2, 2, seed=5, bijective=False)]
    for spec in specs:
        assert verify.atkinson_agrees_with_scan(spec)


def test_diagonal_check():
    for seed in range(3):
        spec = seeded_spec(8, 2, 3, seed=seed)
        chk = verify.diagonal_check(spec)
        assert chk.passed
        assert chk.s_at_zero == cipher.apply_s(spec, 0)
        assert chk.s_at_top == cipher.apply_s(spec, 128)
    # identity mixing at n=4: 0 vs the rotated top bit
    ident = identity_spec(4, 2, r=2)
    chk = verify.diagonal_check(ident)
    assert chk.passed and chk.s_at_zero == 0

    # contrived collision: constant boxes make S constant
    tables = tuple(tuple(0 for _ in range(4)) for _ in range(4))
    flat = CipherSpec(8, 2, 4, 3, tables)
    chk = verify.diagonal_check(flat)
    assert not chk.passed and chk.s_at_zero == chk.s_at_top


def test_affine_check_bounds():
    assert verify.affine_check(8).excluded          # 3 + 2 < 8
    assert verify.affine_check(32).excluded         # 5 + 2 < 32
    assert not verify.affine_check(4).excluded      # 2 + 2 >= 4
    assert not verify.affine_check(5).excluded      # 3 + 2 >= 5
    assert verify.affine_check(6).excluded          # 3 + 2 < 6
    for n in range(6, 65):
        assert verify.affine_check(n).excluded
    for n in range(2, 6):
        assert not verify.affine_check(n).excluded
    with pytest.raises(ValueError):
        verify.affine_check(1)


def test_wreath_check_conforming():
    for n, m, r, seed in ((8, 2, 3, 0), (8, 2, 2, 1), (8, 2, 6, 2),
                          (12, 3, 5, 3), (12, 2, 7, 4)):
        spec = seeded_spec(n, m, r, seed=seed)
        chk = verify.wreath_check(spec)
        assert chk.distinct_images and chk.top_bricks_agree and chk.excluded


def test_wreath_check_identity_minimal_rotation():
    # identity boxes, r = m: zero maps to zero, the top word rotates
    # into the low half; the top bricks of both images are zero
    spec = identity_spec(8, 2, r=2)
    chk = verify.wreath_check(spec)
    assert chk.s_at_zero == 0
    assert chk.s_at_top == 1 << (7 + 2 - 8)  # top bit rotated around
    assert chk.top_slice_zero == 0 and chk.top_slice_top == 0
    assert chk.excluded


def test_wreath_check_r0_not_excluded():
    # without the rotation the top bricks genuinely differ
    for seed in range(3):
        spec = seeded_spec(8, 2, 0, seed=seed)
        chk = verify.wreath_check(spec)
        assert chk.distinct_images
        assert not chk.top_bricks_agree
        assert not chk.excluded


def test_psl_check():
    chk = verify.psl_check(8)
    assert chk.excluded
    assert (chk.factor_minus, chk.factor_plus) == (255, 257)
    assert chk.gcd_value == 1
    chk2 = verify.psl_check(2)
    assert chk2.excluded and (chk2.factor_minus, chk2.factor_plus) == (3, 5)
    for n in range(2, 65):
        chk = verify.psl_check(n)
        assert chk.excluded
        assert chk.factor_minus * chk.factor_plus == (1 << (2 * n)) - 1
    with pytest.raises(ValueError):
        verify.psl_check(1)


def test_full_verdict_alt_certified():
    spec = cipher.load_spec("specs/conforming_n8.json")
    v = verify.full_verdict(spec, seed=20260823)
    assert v.conclusion == verify.ALT_CERTIFIED
    assert v.exit_code == 0
    assert v.parity.passed and v.transitivity.passed and v.primitive
    assert v.witness is not None
    assert 32768 < v.witness.prime < 65534
    # independent replay of the witness word
    from roundgroup import groups
    gens = perms.standard_generators(spec)
    element = groups.evaluate_witness_word(gens, v.witness.word)
    powered = perms.power(element, v.witness.other_lcm)
    lengths = perms.cycle_lengths(powered)
    assert lengths[-1] == v.witness.prime and (lengths[:-1] == 1).all()


def test_full_verdict_imprimitive_control():
    v = verify.full_verdict(identity_spec(8, 2), seed=1)
    assert v.conclusion == verify.IMPRIMITIVE
    assert v.exit_code == 2
    assert len(v.scan.certified) == 7
    assert v.witness is None


def test_full_verdict_nonbijective_gate():
    spec = seeded_spec(8, 2, 3, seed=0, bijective=False)
    v = verify.full_verdict(spec, seed=2)
    assert v.conclusion == verify.INCONCLUSIVE
    assert v.exit_code == 3
    assert not v.validation.bijective
    assert v.witness is None


def test_full_verdict_theorem_applies_on_budget_zero():
    # no witness search budget: certification falls back to the
    # case-elimination chain, which is in scope at n=8
    spec = cipher.load_spec("specs/conforming_n8.json")
    v = verify.full_verdict(spec, seed=3, budget=0)
    assert v.witness is None
    assert v.conclusion == verify.THEOREM_APPLIES
    assert v.exit_code == 0


def test_full_verdict_deterministic():
    spec = cipher.load_spec("specs/conforming_n4.json")
    v1 = verify.full_verdict(spec, seed=9)
    v2 = verify.full_verdict(spec, seed=9)
    assert v1 == v2
