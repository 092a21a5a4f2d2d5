"""Seeded random-graph corpora for verification runs and tests.

All draws flow through the SplitMix64 stream of the graph generator, so a
corpus is fully determined by its parameters; rejected draws (disconnected
or degenerate-spectrum graphs) simply advance the stream.
"""

from __future__ import annotations

from .graphs import Graph, _splitmix64, connected, erdos_renyi
from .spectral import decompose

_MAX_TRIES = 500


def er_corpus(
    count: int,
    n_low: int,
    n_high: int,
    p: float,
    seed: int,
    connected_only: bool = True,
    simple_only: bool = False,
) -> list[Graph]:
    """count seeded Erdos-Renyi graphs with n drawn uniformly from
    [n_low, n_high], filtered to connected and/or simple-spectrum graphs."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if n_low < 1 or n_high < n_low:
        raise ValueError("need 1 <= n_low <= n_high")
    out: list[Graph] = []
    state = int(seed) & ((1 << 64) - 1)
    for _ in range(count):
        for attempt in range(_MAX_TRIES):
            state, u = _splitmix64(state)
            n = n_low + int(u * (n_high - n_low + 1))
            n = min(n, n_high)
            state, _ = _splitmix64(state)
            g = erdos_renyi(n, p, state)
            if connected_only and not connected(g):
                continue
            if simple_only and not decompose(g).all_simple:
                continue
            out.append(g)
            break
        else:
            raise RuntimeError(
                f"could not draw an admissible graph in {_MAX_TRIES} tries "
                f"(n in [{n_low}, {n_high}], p={p})"
            )
    return out
