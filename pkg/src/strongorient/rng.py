"""Counter-based random bits for orientation sampling.

Every edge direction is a pure function of (seed, trial, edge): the 64-bit
counter ``trial * 2**32 + edge`` is run through the splitmix64 finalizer and
the top bit of the result decides the arc.  Because no state is carried
between draws, any partitioning of the trial range (chunks, threads, separate
processes) reproduces exactly the same orientations, which is what makes
multi-threaded runs byte-identical to single-threaded ones.

The same mixing constants are reimplemented in the numba and numpy kernel
backends; ``tests/test_kernels.py`` pins all three to identical output.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB

# counter layout: trial in the high 32 bits, edge in the low 32
EDGE_SHIFT = 32
MAX_EDGES = 1 << EDGE_SHIFT


def mix64(z: int) -> int:
    """splitmix64 finalizer on a 64-bit word."""
    z = (z + GOLDEN) & MASK64
    z = ((z ^ (z >> 30)) * MIX1) & MASK64
    z = ((z ^ (z >> 27)) * MIX2) & MASK64
    return z ^ (z >> 31)


def orientation_bit(seed: int, trial: int, edge: int) -> int:
    """Direction bit for one edge in one trial: 0 or 1."""
    counter = ((trial << EDGE_SHIFT) | edge) & MASK64
    word = mix64((seed ^ (counter * GOLDEN)) & MASK64)
    return word >> 63


def orientation_word(seed: int, trial: int, edge: int) -> int:
    """Full mixed 64-bit word for one (trial, edge) counter."""
    counter = ((trial << EDGE_SHIFT) | edge) & MASK64
    return mix64((seed ^ (counter * GOLDEN)) & MASK64)


def derive_seed(seed: int, stream: int) -> int:
    """Decorrelated child seed for an auxiliary stream (e.g. per-block graphs)."""
    return mix64((seed ^ mix64(stream)) & MASK64)


class OrientationStream:
    """Stateful convenience wrapper: successive trials from one seed.

    The stream only tracks the next trial index; the bits themselves come from
    the stateless counter functions above.
    """

    def __init__(self, seed: int, start_trial: int = 0):
        if not 0 <= seed <= MASK64:
            raise ValueError("seed must fit in 64 bits")
        self.seed = seed
        self.next_trial = start_trial

    def next_bits(self, m: int) -> int:
        """Bitmask of m direction bits for the next trial (bit j = edge j)."""
        if m >= MAX_EDGES:
            raise ValueError("edge index must fit in 32 bits")
        t = self.next_trial
        self.next_trial += 1
        bits = 0
        for j in range(m):
            bits |= orientation_bit(self.seed, t, j) << j
        return bits
