"""Group-theoretic analysis of a GOST-like Feistel cipher.

The package materializes the cipher's round maps as dense permutations
of the full state set and mechanically certifies, parameter set by
parameter set, the facts that identify the generated group: generator
parities, transitivity, an exhaustive imprimitivity scan over the
modular-subgroup lattice, case eliminations for the remaining
primitive-group families, and an independent large-cycle certificate.
"""

__version__ = "0.1.0"
