"""Isomorphism classes of small connected graphs.

The canonical key is the lexicographically least upper-triangular adjacency
bitstring over all n! vertex orders, so the cost grows like n!; n is capped
at 8.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator

import numpy as np

from .graphs import Graph, component_summary

MAX_N = 8


class EnumerationCapError(ValueError):
    pass


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    iu, ju = np.triu_indices(n, k=1)
    return iu, ju


def _keys_for_all_orders(adj: np.ndarray) -> np.ndarray:
    """Integer encodings (first pair most significant) of the bitstring under each vertex order."""
    n = adj.shape[0]
    perms = _perm_table(n)
    iu, ju = _pairs(n)
    # row r of perms lists which original vertex sits at each new position
    bits = adj[perms[:, iu], perms[:, ju]]
    weights = 1 << np.arange(len(iu) - 1, -1, -1, dtype=np.int64)
    return bits.astype(np.int64) @ weights


def canonical_key(G: Graph) -> str:
    n = G.n
    if n > MAX_N:
        raise EnumerationCapError(f"canonical_key is capped at n={MAX_N}, got n={n}")
    m = n * (n - 1) // 2
    if m == 0:
        return f"{n}:"
    adj = np.zeros((n, n), dtype=bool)
    for u, v in G.edges:
        adj[u, v] = adj[v, u] = True
    best = int(_keys_for_all_orders(adj).min())
    return f"{n}:" + format(best, f"0{m}b")


def graph_from_key(key: str) -> Graph:
    head, _, bits = key.partition(":")
    n = int(head)
    iu, ju = np.triu_indices(n, k=1)
    edges = [(int(i), int(j)) for i, j, b in zip(iu, ju, bits) if b == "1"]
    return Graph.from_edges(n, edges, name=key)


def is_connected(G: Graph) -> bool:
    s = component_summary(G)
    return s.p == 1 and s.isolated == 0 or G.n == 1


@lru_cache(maxsize=None)
def _connected_keys(n: int) -> tuple[str, ...]:
    if n == 1:
        return ("1:",)
    # every connected graph has a vertex whose removal leaves it connected,
    # so extending connected (n-1)-vertex graphs by one vertex reaches them all
    keys: set[str] = set()
    for base_key in _connected_keys(n - 1):
        base = graph_from_key(base_key)
        for mask in range(1, 1 << (n - 1)):
            edges = set(base.edges) | {(i, n - 1) for i in range(n - 1) if mask >> i & 1}
            keys.add(canonical_key(Graph.from_edges(n, edges)))
    return tuple(sorted(keys))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One connected graph per isomorphism class on n vertices, sorted by canonical key."""
    if n > MAX_N:
        raise EnumerationCapError(f"enumeration is capped at n={MAX_N}, got n={n}")
    if n < 1:
        return
    for key in _connected_keys(n):
        yield graph_from_key(key)
