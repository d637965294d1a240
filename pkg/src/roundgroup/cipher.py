"""The cipher under study: a Feistel network whose mixing map is a
bricklayer of S-boxes followed by a rotation.

A parameter set is (n, m, delta, r) with n = delta*m.  A state is a
pair of n-bit words (x1, x2).  The maps, all in postfix order (leftmost
applied first) when composed:

* gamma: brick j (j = 1..delta) is the m-bit slice at bit positions
  [(j-1)*m, j*m); brick 1 sits in the least significant bits.  Each
  brick is pushed through its own S-box table in place.
* S = gamma followed by rotation by r (words.rotate_left).
* sigma: (x1, x2) -> (x2, x1 ^ (x2 S)), the key-free Feistel swap.
* rho(k): the modular translation (x1 + k1, x2 + k2) mod 2**n.
* gost_round(k): (x1, x2) -> (x2, x1 ^ ((x2 + k mod 2**n) S)); equals
  rho((0, k)) then sigma then rho((-k, 0)).
* generalized_round(k, h) = rho(k) then sigma then rho(h), for two
  unrelated key pairs; gost_round and sigma and rho are all instances.

The parameter set r = 11, n = 32, m = 4, delta = 8 is the layout of the
GOST block cipher's round function.  No published S-box tables are
bundled here: shipped fixtures use identity or seeded random tables.

Non-conforming rotations (outside m <= r <= (delta-1)*m) and
non-bijective tables are accepted with flags, not rejected: degenerate
parameter sets are the negative controls for everything downstream.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from . import words

# The real cipher's parameter frame (not its secret tables).
GOST_PARAMS = (32, 4, 8, 11)

TABLE_CAP = 1 << 24


@dataclass(frozen=True)
class CipherSpec:
    """Immutable parameter set: widths, rotation extent, S-box tables.

    sboxes[j] is the table for brick j+1 (brick numbering starts at 1
    in the least significant position); it must have 2**m entries in
    [0, 2**m).  Bijectivity is NOT required here; see validate_spec.
    """

    n: int
    m: int
    delta: int
    r: int
    sboxes: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        words.check_width(self.n)
        if self.m < 1 or self.delta < 1:
            raise ValueError("m and delta must be positive")
        if self.n != self.delta * self.m:
            raise ValueError(f"n = {self.n} != delta*m = {self.delta * self.m}")
        if not 0 <= self.r < self.n:
            raise ValueError(f"rotation extent {self.r} out of [0, {self.n})")
        if len(self.sboxes) != self.delta:
            raise ValueError(f"need {self.delta} S-box tables, got {len(self.sboxes)}")
        size = 1 << self.m
        for j, table in enumerate(self.sboxes):
            if len(table) != size:
                raise ValueError(f"table {j}: {len(table)} entries, need {size}")
            for v in table:
                if not 0 <= v < size:
                    raise ValueError(f"table {j}: entry {v} out of range")

    @property
    def degree(self) -> int:
        """Number of states = 2**(2n)."""
        return 1 << (2 * self.n)

    @property
    def conforming(self) -> bool:
        return self.m <= self.r <= (self.delta - 1) * self.m

    @property
    def bijective(self) -> bool:
        size = 1 << self.m
        return all(sorted(t) == list(range(size)) for t in self.sboxes)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "r": self.r,
            "sboxes": [list(t) for t in self.sboxes],
        }

    def digest(self) -> str:
        """sha256 of the canonical serialized form; report header id."""
        blob = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


def _parse_entry(v) -> int:
    # tables may mix decimal ints and hex strings like "0x1f"
    if isinstance(v, str):
        return int(v, 0)
    if isinstance(v, int):
        return v
    raise ValueError(f"S-box entry {v!r} is neither int nor numeric string")


def spec_from_dict(data: dict) -> CipherSpec:
    try:
        n = int(data["n"])
        m = int(data["m"])
        delta = int(data["delta"])
        r = int(data["r"])
        tables = tuple(
            tuple(_parse_entry(v) for v in table) for table in data["sboxes"]
        )
    except KeyError as e:
        raise ValueError(f"spec file missing field {e.args[0]!r}") from None
    return CipherSpec(n, m, delta, r, tables)


def load_spec(path) -> CipherSpec:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: line {e.lineno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise ValueError(f"{path}: spec file must contain one object")
    return spec_from_dict(data)


def save_spec(spec: CipherSpec, path) -> None:
    with open(path, "w") as fh:
        json.dump(spec.to_dict(), fh, indent=1)
        fh.write("\n")


def identity_sboxes(delta: int, m: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(range(1 << m)) for _ in range(delta))


def random_sboxes(delta: int, m: int, rng: np.random.Generator,
                  bijective: bool = True) -> tuple[tuple[int, ...], ...]:
    size = 1 << m
    out = []
    for _ in range(delta):
        if bijective:
            out.append(tuple(int(v) for v in rng.permutation(size)))
        else:
            out.append(tuple(int(v) for v in rng.integers(0, size, size)))
    return tuple(out)


def random_spec(m: int, delta: int, r: int, rng: np.random.Generator,
                bijective: bool = True) -> CipherSpec:
    return CipherSpec(delta * m, m, delta, r,
                      random_sboxes(delta, m, rng, bijective))


# ---------------------------------------------------------------------------
# the maps, one word / one state at a time


def apply_gamma(spec: CipherSpec, x: int) -> int:
    out = 0
    brick = (1 << spec.m) - 1
    for j in range(spec.delta):
        shift = j * spec.m
        out |= spec.sboxes[j][(x >> shift) & brick] << shift
    return out


def apply_s(spec: CipherSpec, x: int) -> int:
    return words.rotate_left(apply_gamma(spec, x), spec.r, spec.n)


State = tuple[int, int]


def sigma_apply(spec: CipherSpec, st: State) -> State:
    x1, x2 = st
    return (x2, x1 ^ apply_s(spec, x2))


def sigma_inverse_apply(spec: CipherSpec, st: State) -> State:
    y1, y2 = st
    return (y2 ^ apply_s(spec, y1), y1)


def rho_apply(k: State, st: State, n: int) -> State:
    return (words.add_mod(st[0], k[0], n), words.add_mod(st[1], k[1], n))


def gost_round(spec: CipherSpec, k: int, st: State) -> State:
    x1, x2 = st
    return (x2, x1 ^ apply_s(spec, words.add_mod(x2, k, spec.n)))


def generalized_round(spec: CipherSpec, k: State, h: State, st: State) -> State:
    st = rho_apply(k, st, spec.n)
    st = sigma_apply(spec, st)
    return rho_apply(h, st, spec.n)


# ---------------------------------------------------------------------------
# vectorized table forms, for the dense-permutation machinery


def gamma_table(spec: CipherSpec) -> np.ndarray:
    """x -> gamma(x) as an int64 array over all 2**n words."""
    if (1 << spec.n) > TABLE_CAP:
        raise ValueError(f"gamma table for n={spec.n} exceeds cap 2**24")
    x = np.arange(1 << spec.n, dtype=np.int64)
    out = np.zeros_like(x)
    brick = (1 << spec.m) - 1
    for j in range(spec.delta):
        shift = j * spec.m
        table = np.asarray(spec.sboxes[j], dtype=np.int64)
        out |= table[(x >> shift) & brick] << shift
    return out


def s_table(spec: CipherSpec) -> np.ndarray:
    g = gamma_table(spec)
    r, n = spec.r, spec.n
    if r == 0:
        return g
    m = (1 << n) - 1
    return ((g << r) | (g >> (n - r))) & m


# ---------------------------------------------------------------------------
# validation


@dataclass(frozen=True)
class SpecValidation:
    """What validate_spec found; structural failures raise instead."""

    conforming: bool
    bijective: bool
    theorem_scope: bool
    gost_parameters: bool
    notes: tuple[str, ...] = field(default=())


def validate_spec(spec: CipherSpec) -> SpecValidation:
    """Flags for the analysis pipeline; never rejects a well-formed spec.

    theorem_scope is the conjunction under which the full result chain
    (primitivity scan plus the case eliminations) is known to apply:
    delta >= 4, m >= 2, conforming rotation, bijective tables.
    """
    notes = []
    conforming = spec.conforming
    bijective = spec.bijective
    if not conforming:
        lo, hi = spec.m, (spec.delta - 1) * spec.m
        notes.append(f"rotation extent {spec.r} outside conforming range "
                     f"[{lo}, {hi}]")
    if not bijective:
        notes.append("at least one S-box table is not a permutation")
    scope = conforming and bijective and spec.delta >= 4 and spec.m >= 2
    if spec.delta < 4:
        notes.append("delta < 4: outside the certified parameter scope")
    if spec.m < 2:
        notes.append("m < 2: outside the certified parameter scope")
    gost = (spec.n, spec.m, spec.delta, spec.r) == GOST_PARAMS
    if gost:
        notes.append("parameter frame matches the real GOST round "
                     "(n=32, m=4, delta=8, r=11)")
    return SpecValidation(conforming, bijective, scope, gost, tuple(notes))
