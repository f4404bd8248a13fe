"""Seeded SplitMix64 generator and the digraph samplers built on it.

The samplers consume generator output in a fixed order (pairs ``i<j`` in
lexicographic order, one draw per pair) so a seed pins the instance stream
exactly.
"""

from __future__ import annotations

from .canon import digraph_from_states
from .digraph import ORIENTED, Digraph

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Integer in ``[0, bound)`` by multiply-shift."""
        return (self.next_u64() * bound) >> 64


def random_digraph(n: int, mode: str, rng: SplitMix64) -> Digraph:
    """Uniform labelled digraph: each pair takes one of 3 (oriented) or 4 states."""
    nstates = 3 if mode == ORIENTED else 4
    states = [rng.below(nstates) for _ in range(n * (n - 1) // 2)]
    return digraph_from_states(n, states, mode)


def random_tournament(n: int, rng: SplitMix64) -> Digraph:
    states = [1 + rng.below(2) for _ in range(n * (n - 1) // 2)]
    return digraph_from_states(n, states, ORIENTED)


def random_dense_digraph(n: int, mode: str, rng: SplitMix64) -> Digraph:
    """Each pair is absent with probability 1/8; present pairs pick a
    direction uniformly (oriented) or one of ``->``, ``<-``, both (general).

    Used where uniform sampling almost never reaches a high chromatic
    threshold.
    """
    states = []
    for _ in range(n * (n - 1) // 2):
        if rng.below(8) == 0:
            states.append(0)
        elif mode == ORIENTED:
            states.append(1 + rng.below(2))
        else:
            states.append(1 + rng.below(3))
    return digraph_from_states(n, states, mode)


SAMPLERS = {
    "uniform": random_digraph,
    "dense": random_dense_digraph,
    "tournament": lambda n, mode, rng: random_tournament(n, rng),
}
