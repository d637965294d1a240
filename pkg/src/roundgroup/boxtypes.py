"""Box types: classifying subsets of the word space brick by brick.

Cut an n-bit word into delta bricks of m bits, low bits first.  For a
set D of words, project onto each brick.  D "has a type" when it is
exactly the product of its brick projections, i.e. |D| equals the
product of the projection sizes.  Each brick of a typed set is then
classed by projection size: White (one value), Black (all 2**m
values), Ruled (strictly between).

The subgroup <2**q> always has a type, and the picture explains the
letters.  Example n=8, m=2, q=3 (brick 1 = low bits, drawn leftmost):

      brick:     1    2    3    4
      bits:    [0,1][2,3][4,5][6,7]
      <2**3>:   00   0*   **   **     ->  (W, R, B, B)

Bits below q are pinned to zero, bits from q upward are free, and when
q falls strictly inside a brick that brick is Ruled (its projection is
a proper subgroup of the brick).  q a multiple of m gives whites then
blacks with no ruled brick: a "whole" subgroup.

The calculus proved about these types elsewhere and tested here:
xor-translation preserves types of arbitrary typed sets;
modular-translation preserves types of subgroups (not of arbitrary
typed sets: carries can break them); a bijective bricklayer preserves
subgroup types and sends whole subgroups to an exact modular coset;
and on conforming bijective parameter sets the full mixing map always
CHANGES the type of every proper nontrivial subgroup, which is the
engine behind the imprimitivity scan coming up empty.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cipher import CipherSpec, gamma_table, s_table

WHITE = "W"
RULED = "R"
BLACK = "B"


@dataclass(frozen=True)
class TypeVector:
    """Per-brick classes of a typed set, brick 1 (low bits) first."""

    boxes: tuple[str, ...]

    def __str__(self) -> str:
        return "".join(self.boxes)

    @property
    def whites(self) -> int:
        return self.boxes.count(WHITE)

    @property
    def blacks(self) -> int:
        return self.boxes.count(BLACK)


def type_of(values, m: int, delta: int) -> TypeVector | None:
    """TypeVector of the set, or None when it has no type."""
    arr = np.unique(np.asarray(list(values) if not isinstance(
        values, np.ndarray) else values, dtype=np.int64))
    if arr.size == 0:
        raise ValueError("type of the empty set is undefined")
    brick = (1 << m) - 1
    sizes = []
    for j in range(delta):
        sizes.append(len(np.unique((arr >> (j * m)) & brick)))
    prod = 1
    for size in sizes:
        prod *= size
    if prod != arr.size:
        return None
    full = 1 << m
    codes = tuple(WHITE if s == 1 else BLACK if s == full else RULED
                  for s in sizes)
    return TypeVector(codes)


def subgroup_type(q: int, m: int, delta: int) -> TypeVector:
    """Type of <2**q> from the structure alone: whites below, blacks
    above, one ruled brick when q cuts a brick."""
    if not 0 <= q <= delta * m:
        raise ValueError(f"q = {q} out of range")
    codes = []
    for j in range(delta):
        lo, hi = j * m, (j + 1) * m
        if hi <= q:
            codes.append(WHITE)
        elif lo >= q:
            codes.append(BLACK)
        else:
            codes.append(RULED)
    return TypeVector(tuple(codes))


def is_whole(q: int, m: int) -> bool:
    return q % m == 0


def subgroup_members_array(q: int, n: int) -> np.ndarray:
    return np.arange(1 << (n - q), dtype=np.int64) << q


# ---------------------------------------------------------------------------
# the four translation / bricklayer checks


def xor_translate_keeps_type(values, v: int, m: int, delta: int) -> bool:
    """Xor by any word leaves the type of any typed set unchanged."""
    before = type_of(values, m, delta)
    if before is None:
        raise ValueError("set has no type; out of scope")
    arr = np.asarray(list(values) if not isinstance(values, np.ndarray)
                     else values, dtype=np.int64)
    after = type_of(arr ^ v, m, delta)
    return after == before


def modular_translate_keeps_type(q: int, v: int, n: int, m: int,
                                 delta: int) -> bool:
    """Adding v mod 2**n to the subgroup <2**q> keeps its type.

    True for subgroups despite carries; arbitrary typed sets can lose
    or change their type under the same translation.
    """
    mask = (1 << n) - 1
    translated = (subgroup_members_array(q, n) + v) & mask
    return type_of(translated, m, delta) == subgroup_type(q, m, delta)


@dataclass(frozen=True)
class BricklayerCheck:
    q: int
    whole: bool
    type_preserved: bool
    coset_identity: bool | None  # whole subgroups only


def bricklayer_check(spec: CipherSpec, q: int) -> BricklayerCheck:
    """The bricklayer against <2**q>: type preservation always, and
    for whole subgroups the exact set identity
    gamma(D) = gamma(0) + D (modular coset of the image of zero)."""
    n, m, delta = spec.n, spec.m, spec.delta
    mask = (1 << n) - 1
    table = gamma_table(spec)
    members = subgroup_members_array(q, n)
    image = np.unique(table[members])
    type_ok = type_of(image, m, delta) == subgroup_type(q, m, delta)
    coset: bool | None = None
    if is_whole(q, m):
        shifted = np.sort((members + int(table[0])) & mask)
        coset = bool(np.array_equal(image, shifted))
    return BricklayerCheck(q, is_whole(q, m), type_ok, coset)


def s_image(spec: CipherSpec, q: int) -> np.ndarray:
    """The image of <2**q> under the full mixing map, as a sorted set."""
    return np.unique(s_table(spec)[subgroup_members_array(q, spec.n)])


def s_image_type_violations(spec: CipherSpec) -> list[int]:
    """q in (0, n) where the mixing map FAILED to change the type of
    <2**q>: image typed and of the same type.  Expected empty on
    conforming bijective specs; the r=0 controls populate it."""
    out = []
    for q in range(1, spec.n):
        image_type = type_of(s_image(spec, q), spec.m, spec.delta)
        if image_type is not None and \
                image_type == subgroup_type(q, spec.m, spec.delta):
            out.append(q)
    return out


def s_image_coset_violations(spec: CipherSpec) -> list[int]:
    """q in (0, n) where the image of <2**q> under the mixing map is
    exactly the modular coset (image of 0) + <2**q>.  Empty on
    conforming bijective specs; this set equality is precisely what
    would hand the scan an invariant partition."""
    n = spec.n
    mask = (1 << n) - 1
    table = s_table(spec)
    out = []
    for q in range(1, n):
        members = subgroup_members_array(q, n)
        image = np.unique(table[members])
        shifted = np.sort((members + int(table[0])) & mask)
        if image.size == shifted.size and np.array_equal(image, shifted):
            out.append(q)
    return out


def find_translation_fragile_set(n: int, m: int, delta: int,
                                 limit: int = 200_000):
    """Search for a typed NON-subgroup set whose type breaks under some
    modular translation: the demonstration that the subgroup
    hypothesis in the translation lemma is doing real work.

    Returns (set values, v) or None.  Deterministic sweep, small n.
    """
    from itertools import combinations

    mask = (1 << n) - 1
    space = list(range(1 << n))
    for size in (2, 3, 4):
        for combo in combinations(space, size):
            arr = np.array(combo, dtype=np.int64)
            before = type_of(arr, m, delta)
            if before is None:
                continue
            limit -= 1
            if limit <= 0:
                return None
            for v in range(1, 1 << n):
                if type_of((arr + v) & mask, m, delta) != before:
                    return combo, v
    return None
