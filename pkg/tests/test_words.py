"""Word arithmetic: rotation convention, modular structure, subgroups."""

import numpy as np
import pytest

from roundgroup import words


def test_rotate_convention_pinned():
    # width 4: rotating by 1 moves bit 0 to bit 1, so value 1 -> 2.
    assert words.rotate_left(1, 1, 4) == 2
    # displayed first-coordinate-first, 1000 -> 0100: same statement.
    assert words.bits_of(1, 4) == (1, 0, 0, 0)
    assert words.bits_of(2, 4) == (0, 1, 0, 0)


def test_rotate_is_bijective_and_composes():
    n = 6
    for r in range(n):
        images = [words.rotate_left(x, r, n) for x in range(1 << n)]
        assert sorted(images) == list(range(1 << n))
    rng = np.random.default_rng(7)
    for _ in range(50):
        x = int(rng.integers(0, 1 << n))
        a, b = int(rng.integers(0, 8)), int(rng.integers(0, 8))
        two = words.rotate_left(words.rotate_left(x, a, n), b, n)
        assert two == words.rotate_left(x, (a + b) % n, n)
    assert words.rotate_left(5, n, n) == 5


def test_bits_round_trip():
    for x in range(1 << 5):
        assert words.from_bits(words.bits_of(x, 5)) == x


def test_modular_ops():
    assert words.add_mod(3, 1, 2) == 0
    assert words.neg_mod(0, 4) == 0
    for x in range(16):
        assert words.add_mod(x, words.neg_mod(x, 4), 4) == 0
        assert words.sub_mod(0, x, 4) == words.neg_mod(x, 4)


def test_involution_is_the_unique_order_two_element():
    for n in (2, 3, 4, 6):
        top = words.involution(n)
        assert words.add_mod(top, top, n) == 0
        order_two = [x for x in range(1, 1 << n)
                     if words.add_mod(x, x, n) == 0]
        assert order_two == [top]


def test_top_bit_translation_is_also_xor():
    # adding the order-2 element never carries: x + 2^(n-1) == x ^ 2^(n-1)
    for n in (2, 3, 5, 8):
        top = words.involution(n)
        for x in range(1 << min(n, 8)):
            assert words.add_mod(x, top, n) == x ^ top


def test_subgroup_members_and_closure():
    for n in (2, 3, 4):
        for q in range(n + 1):
            mem = words.subgroup_members(q, n)
            assert len(mem) == 1 << (n - q)
            memset = set(mem)
            for a in mem:
                assert words.subgroup_contains(a, q)
                for b in mem:
                    assert words.add_mod(a, b, n) in memset


def test_every_generated_subgroup_is_a_power_of_two_chain():
    # closure of any subset is the subgroup of the smallest 2-adic level
    n = 6
    rng = np.random.default_rng(3)
    for _ in range(40):
        size = int(rng.integers(1, 5))
        seed = [int(v) for v in rng.integers(1, 1 << n, size)]
        closure = {0}
        frontier = list(seed)
        while frontier:
            x = frontier.pop()
            if x in closure:
                continue
            closure.add(x)
            frontier.extend(words.add_mod(x, y, n) for y in list(closure))
        q = min((x & -x).bit_length() - 1 for x in seed)
        assert closure == set(words.subgroup_members(q, n))


def test_endo_additive_and_automorphism_iff_odd():
    n = 5
    for z in range(1 << n):
        endo = words.CyclicEndo(z, n)
        for x in range(0, 1 << n, 3):
            for y in range(0, 1 << n, 5):
                assert endo(words.add_mod(x, y, n)) == \
                    words.add_mod(endo(x), endo(y), n)
        image = {endo(x) for x in range(1 << n)}
        assert (len(image) == 1 << n) == endo.is_automorphism
        assert endo.is_automorphism == (z % 2 == 1)


def test_every_additive_map_is_a_multiplication():
    # an endomorphism is pinned by its value at 1
    n = 4
    for z in range(1 << n):
        endo = words.CyclicEndo(z, n)
        assert all(endo(x) == words.endo_apply(endo(1), x, n)
                   for x in range(1 << n))


def test_word_class_guards():
    with pytest.raises(ValueError):
        words.Word(4, 2)
    with pytest.raises(ValueError):
        words.Word(0, 1)
    with pytest.raises(ValueError):
        words.Word(1, 4) ^ words.Word(1, 5)


def test_word_ops_and_hex():
    a = words.Word(0b1011, 4)
    b = words.Word(0b0110, 4)
    assert (a ^ b).value == 0b1101
    assert a.boxplus(b).value == (0b1011 + 0b0110) % 16
    assert a.boxplus(a.boxminus()).value == 0
    assert a.rotate(1).value == words.rotate_left(a.value, 1, 4)
    w = words.Word(0x1a2, 12)
    assert w.hex == "1a2"
    assert words.Word.from_hex("1a2", 12) == w


def test_subgroup_dataclass():
    g = words.CyclicSubgroup(2, 6)
    assert g.order == 16
    assert g.contains(0b100100)
    assert not g.contains(0b10)
    assert g.members()[:3] == [0, 4, 8]
