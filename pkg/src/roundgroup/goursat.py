"""All subgroups of Z/2**n x Z/2**n, enumerated without search.

Subgroups of a direct product correspond to quintuples: a subgroup
pair B <= A in the left factor, a pair D <= C in the right factor with
matching quotient order 2**k, and an isomorphism A/B -> C/D.  In the
cyclic 2-group world every subgroup is a power-of-two chain member
<2**s>, and an isomorphism between the two quotients is multiplication
by an odd constant z, distinct exactly for z in 1, 3, ..., 2**k - 1.
A triple is recorded as (s, sB, t, tD, z): A = <2**s>, B = <2**sB>,
C = <2**t>, D = <2**tD>, with sB - s = tD - t = k.

The materialized subgroup is
    { (a, phi(a) + d mod 2**n) : a in A, d in D }   when s <= t,
with phi(x) = z * 2**(t-s) * x mod 2**n, and the mirror-image formula
with the roles of the factors swapped when t < s.  Its size is
|A| * |D| either way.

The enumeration is cross-checked in the tests against a brute-force
closure walk over the whole lattice for n <= 3 (counts 5, 15, 37).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import words


@dataclass(frozen=True, order=True)
class GoursatTriple:
    """One subgroup of Z/2**n x Z/2**n; fields as in the module docstring."""

    n: int
    s: int
    sb: int
    t: int
    td: int
    z: int

    def __post_init__(self) -> None:
        n = self.n
        if not (0 <= self.s <= self.sb <= n and 0 <= self.t <= self.td <= n):
            raise ValueError("subgroup exponents out of range")
        if self.sb - self.s != self.td - self.t:
            raise ValueError("quotient orders differ")
        k = self.sb - self.s
        if k == 0:
            if self.z != 1:
                raise ValueError("trivial quotient needs z = 1")
        elif not (self.z % 2 == 1 and 1 <= self.z < (1 << k)):
            raise ValueError(f"z = {self.z} not an odd residue below 2**{k}")

    @property
    def quotient_exponent(self) -> int:
        return self.sb - self.s

    @property
    def size(self) -> int:
        return 1 << (2 * self.n - self.s - self.td)

    @property
    def is_trivial(self) -> bool:
        return self.size == 1

    @property
    def is_full(self) -> bool:
        return self.size == 1 << (2 * self.n)

    @property
    def is_proper_nontrivial(self) -> bool:
        return not (self.is_trivial or self.is_full)

    def to_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.s, self.sb, self.t, self.td, self.z)

    def describe(self) -> str:
        return (f"(s={self.s}, sB={self.sb}, t={self.t}, "
                f"tD={self.td}, z={self.z})")


def enumerate_subgroups(n: int) -> list[GoursatTriple]:
    """Every subgroup exactly once, in sorted triple order."""
    out = []
    for s in range(n + 1):
        for t in range(n + 1):
            for k in range(min(n - s, n - t) + 1):
                if k == 0:
                    out.append(GoursatTriple(n, s, s, t, t, 1))
                else:
                    for z in range(1, 1 << k, 2):
                        out.append(GoursatTriple(n, s, s + k, t, t + k, z))
    out.sort()
    return out


def count_subgroups(n: int) -> int:
    return len(enumerate_subgroups(n))


def member_pairs(triple: GoursatTriple) -> tuple[np.ndarray, np.ndarray]:
    """(left, right) component arrays of all members, as int64."""
    n = triple.n
    mask = (1 << n) - 1
    s, sb, t, td, z = triple.to_tuple()
    if s <= t:
        a = np.arange(1 << (n - s), dtype=np.int64) << s
        d = np.arange(1 << (n - td), dtype=np.int64) << td
        phi = (a * (z << (t - s))) & mask
        left = np.repeat(a, len(d))
        right = (np.repeat(phi, len(d)) + np.tile(d, len(a))) & mask
    else:
        c = np.arange(1 << (n - t), dtype=np.int64) << t
        b = np.arange(1 << (n - sb), dtype=np.int64) << sb
        phi = (c * (z << (s - t))) & mask
        right = np.repeat(c, len(b))
        left = (np.repeat(phi, len(b)) + np.tile(b, len(c))) & mask
    return left, right


def member_indices(triple: GoursatTriple) -> np.ndarray:
    """Members flattened to state indices left + 2**n * right."""
    left, right = member_pairs(triple)
    return left | (right << triple.n)


def contains(triple: GoursatTriple, a: int, c: int) -> bool:
    """Membership without materializing."""
    n = triple.n
    mask = (1 << n) - 1
    s, sb, t, td, z = triple.to_tuple()
    if s <= t:
        if a & ((1 << s) - 1):
            return False
        return ((c - ((a * (z << (t - s))) & mask)) & ((1 << td) - 1)) == 0
    if c & ((1 << t) - 1):
        return False
    return ((a - ((c * (z << (s - t))) & mask)) & ((1 << sb) - 1)) == 0


def coset_labels(triple: GoursatTriple) -> np.ndarray:
    """A label per state, constant exactly on the cosets of the subgroup.

    Two states differ by a member iff their left parts agree modulo
    2**s and, after subtracting phi of the left part, their right
    parts agree modulo 2**tD (phi is additive, so the correction
    cancels in differences).  Mirror-image formula when t < s.  This
    is the O(degree) quotient map that block certification rides on.
    """
    n = triple.n
    mask = (1 << n) - 1
    s, sb, t, td, z = triple.to_tuple()
    idx = np.arange(1 << (2 * n), dtype=np.int64)
    x1 = idx & mask
    x2 = idx >> n
    if s <= t:
        lab1 = x1 & ((1 << s) - 1)
        lab2 = (x2 - (x1 * (z << (t - s)))) & ((1 << td) - 1)
    else:
        lab1 = x2 & ((1 << t) - 1)
        lab2 = (x1 - (x2 * (z << (s - t)))) & ((1 << sb) - 1)
    return lab1 | (lab2 << n)


# ---------------------------------------------------------------------------
# independent brute-force route (the enumeration oracle for tiny n)


def closure_of(seed: set[tuple[int, int]], n: int) -> frozenset[tuple[int, int]]:
    group = {(0, 0)}
    frontier = list(seed)
    while frontier:
        el = frontier.pop()
        if el in group:
            continue
        group.add(el)
        adds = [(words.add_mod(el[0], o[0], n), words.add_mod(el[1], o[1], n))
                for o in group]
        frontier.extend(a for a in adds if a not in group)
    return frozenset(group)


def brute_force_subgroups(n: int) -> set[frozenset[tuple[int, int]]]:
    """Full subgroup lattice by closure growth; n <= 3 only."""
    if n > 3:
        raise ValueError("brute force oracle limited to n <= 3")
    everything = [(a, c) for a in range(1 << n) for c in range(1 << n)]
    found = {closure_of(set(), n)}
    frontier = [closure_of(set(), n)]
    while frontier:
        base = frontier.pop()
        for el in everything:
            if el in base:
                continue
            grown = closure_of(set(base) | {el}, n)
            if grown not in found:
                found.add(grown)
                frontier.append(grown)
    return found


def member_set(triple: GoursatTriple) -> frozenset[tuple[int, int]]:
    left, right = member_pairs(triple)
    return frozenset(zip(left.tolist(), right.tolist()))
