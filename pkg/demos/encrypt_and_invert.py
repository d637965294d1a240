"""
Running the cipher forward and backward
=======================================

Loads the shipped 16-bit instance, pushes a few states through keyed
rounds, and undoes them again.  Every round is a permutation of the
state space, so decryption is just the inverse walk.
"""

from pathlib import Path

import numpy as np

from roundgroup import cipher, words

spec = cipher.load_spec(Path(__file__).resolve().parent.parent
                        / "specs" / "conforming_n8.json")
print(f"instance: n={spec.n} m={spec.m} delta={spec.delta} r={spec.r}")


# a keyed round adds the key to the right half, sends it through the
# S-boxes and rotation, and XORs the result into the left half; the
# inverse peels those steps off in the opposite order
def keyed_round_inverse(k, st):
    st = cipher.rho_apply((k, 0), st, spec.n)
    st = cipher.sigma_inverse_apply(spec, st)
    return cipher.rho_apply((0, words.neg_mod(k, spec.n)), st, spec.n)


keys = [0x3A, 0xC5, 0x17]
states = [(0x00, 0x00), (0xDE, 0xAD), (0xFF, 0x01)]

for st in states:
    out = st
    for k in keys:
        out = cipher.gost_round(spec, k, out)
    back = out
    for k in reversed(keys):
        back = keyed_round_inverse(k, back)
    print(f"({st[0]:02x},{st[1]:02x}) -> ({out[0]:02x},{out[1]:02x})"
          f" -> ({back[0]:02x},{back[1]:02x})")
    assert back == st

# the mixing map alone is invertible even when the S-box table is not:
# the XOR onto the left half remembers enough to reconstruct the input
lossy = cipher.random_spec(2, 4, 3, np.random.default_rng(7),
                           bijective=False)
st = (0x34, 0x42)
assert cipher.sigma_inverse_apply(lossy, cipher.sigma_apply(lossy, st)) == st
print("round maps invert cleanly, including with a lossy S-box table")
