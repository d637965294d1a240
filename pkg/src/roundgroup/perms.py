"""Dense permutations of the state set, as numpy image arrays.

A permutation of degree N is an int64 array `p` of length N holding a
rearrangement of 0..N-1; p[x] is the image of x.  Composition is in
application order: compose(p, q) applies p first, matching the postfix
convention of the cipher maps.

States (x1, x2) are flattened to indices x1 + 2**n * x2, so the left
word occupies the low bits.  All round maps materialize through the
mixing-map table in O(N) vectorized steps.

The degree cap (2**24) bounds dense materialization; callers wanting
larger parameter sets must stay with the wordwise maps in cipher.
"""

from __future__ import annotations

import numpy as np

from .cipher import CipherSpec, s_table

DEGREE_CAP = 1 << 24


def check_degree(n: int) -> int:
    degree = 1 << (2 * n)
    if degree > DEGREE_CAP:
        raise ValueError(
            f"degree 2**{2 * n} exceeds the dense cap 2**24; "
            f"use the wordwise maps instead")
    return degree


def state_index(st: tuple[int, int], n: int) -> int:
    return st[0] | (st[1] << n)


def index_state(idx: int, n: int) -> tuple[int, int]:
    return idx & ((1 << n) - 1), idx >> n


def identity_perm(degree: int) -> np.ndarray:
    return np.arange(degree, dtype=np.int64)


def is_perm(p: np.ndarray) -> bool:
    seen = np.zeros(len(p), dtype=bool)
    seen[p] = True
    return bool(seen.all())


def compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Apply p first, then q."""
    return q[p]


def compose_all(ps) -> np.ndarray:
    ps = list(ps)
    out = ps[0].copy()
    for p in ps[1:]:
        out = p[out]
    return out


def inverse(p: np.ndarray) -> np.ndarray:
    out = np.empty_like(p)
    out[p] = np.arange(len(p), dtype=p.dtype)
    return out


def power(p: np.ndarray, e: int) -> np.ndarray:
    """p**e by binary exponentiation; e may be a huge python int."""
    if e < 0:
        return power(inverse(p), -e)
    out = identity_perm(len(p))
    base = p
    while e:
        if e & 1:
            out = base[out]
        base = base[base]
        e >>= 1
    return out


def cycle_reps(p: np.ndarray) -> np.ndarray:
    """Smallest element of each point's cycle, by pointer doubling.

    After k rounds m[i] = min of the first 2**k points on i's orbit,
    so log2(N) rounds close every cycle.  Fully vectorized; this is
    what keeps parity checks at degree 2**16 in the millisecond range.
    """
    n = len(p)
    m = np.arange(n, dtype=p.dtype)
    q = p.copy()
    span = 1
    while span < n:
        m = np.minimum(m, m[q])
        q = q[q]
        span <<= 1
    return m


def cycle_lengths(p: np.ndarray) -> np.ndarray:
    """Sorted cycle lengths (with multiplicity), vectorized."""
    _, counts = np.unique(cycle_reps(p), return_counts=True)
    counts.sort()
    return counts


def cycle_lengths_walk(p: np.ndarray) -> list[int]:
    """Cycle lengths by explicit orbit walking.

    Deliberately independent of cycle_reps: the two routes cross-check
    each other in the tests.
    """
    n = len(p)
    images = p.tolist()
    visited = bytearray(n)
    out = []
    for i in range(n):
        if visited[i]:
            continue
        length = 0
        j = i
        while not visited[j]:
            visited[j] = 1
            j = images[j]
            length += 1
        out.append(length)
    out.sort()
    return out


def sign(p: np.ndarray) -> int:
    """+1 for even permutations: parity of (degree - cycle count)."""
    ncycles = len(np.unique(cycle_reps(p)))
    return 1 if (len(p) - ncycles) % 2 == 0 else -1


# ---------------------------------------------------------------------------
# materializing the cipher maps


def _split(n: int) -> tuple[np.ndarray, np.ndarray]:
    idx = np.arange(1 << (2 * n), dtype=np.int64)
    return idx & ((1 << n) - 1), idx >> n


def sigma_perm(spec: CipherSpec) -> np.ndarray:
    check_degree(spec.n)
    x1, x2 = _split(spec.n)
    s = s_table(spec)
    return x2 | ((x1 ^ s[x2]) << spec.n)


def rho_perm(k: tuple[int, int], n: int) -> np.ndarray:
    check_degree(n)
    x1, x2 = _split(n)
    mask = (1 << n) - 1
    return ((x1 + k[0]) & mask) | (((x2 + k[1]) & mask) << n)


def gost_perm(spec: CipherSpec, k: int) -> np.ndarray:
    check_degree(spec.n)
    x1, x2 = _split(spec.n)
    s = s_table(spec)
    mask = (1 << spec.n) - 1
    return x2 | ((x1 ^ s[(x2 + k) & mask]) << spec.n)


def generalized_perm(spec: CipherSpec, k: tuple[int, int],
                     h: tuple[int, int]) -> np.ndarray:
    check_degree(spec.n)
    x1, x2 = _split(spec.n)
    s = s_table(spec)
    mask = (1 << spec.n) - 1
    y2 = (x2 + k[1]) & mask
    left = (y2 + h[0]) & mask
    right = ((((x1 + k[0]) & mask) ^ s[y2]) + h[1]) & mask
    return left | (right << spec.n)


def standard_generators(spec: CipherSpec) -> list[np.ndarray]:
    """The three generators of the round group: rho(1,0), rho(0,1), sigma.

    Every generalized round is a product of these with their inverses,
    and conversely, so they generate the whole group under study.
    """
    return [rho_perm((1, 0), spec.n), rho_perm((0, 1), spec.n),
            sigma_perm(spec)]
