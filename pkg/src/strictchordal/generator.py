"""Deterministic pseudo-random strictly chordal graphs.

A block graph is grown by attaching cliques at random existing vertices;
true twins are then added to its vertices.  The class is closed under both
steps, so every output passes the recognition pipeline.  The same GenParams
always yield the same graph (within this implementation; fixtures meant to
be shared are shipped as files instead).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class GenParams:
    """Generation knobs; identical params give byte-identical graphs.

    When ``target_n`` is set, blocks are attached until the expected final
    size (after twin inflation) reaches it and ``block_count`` is ignored;
    the hit is soft (about +-20% for large targets).
    """

    seed: int
    block_count: int = 8
    max_block_size: int = 4
    max_twins: int = 2
    target_n: int | None = None

    def __post_init__(self):
        if self.block_count < 1:
            raise ValueError("block_count must be >= 1")
        if self.max_block_size < 2:
            raise ValueError("max_block_size must be >= 2")
        if self.max_twins < 0:
            raise ValueError("max_twins must be >= 0")
        if self.target_n is not None and self.target_n < 2:
            raise ValueError("target_n must be >= 2")


def _twin_rng(params: GenParams) -> random.Random:
    # distinct stream from the block stream, still fully seed-determined
    return random.Random((params.seed * 0x9E3779B97F4A7C15 + 0x632BE59BD9B4E019) & (2**63 - 1))


def random_block_graph(params: GenParams) -> Graph:
    """Connected block graph: every biconnected component is a clique.

    Starts from one clique and attaches further cliques of random size
    (uniform in [2, max_block_size]) at uniformly chosen existing vertices.
    """
    rng = random.Random(params.seed)
    edges = []

    def add_block(members):
        for i, u in enumerate(members):
            for v in members[i + 1:]:
                edges.append((u, v))

    size = rng.randint(2, params.max_block_size)
    add_block(list(range(size)))
    n = size

    if params.target_n is not None:
        base_target = max(2, round(params.target_n / (1 + params.max_twins / 2)))
        more = None
    else:
        base_target = None
        more = params.block_count - 1
    while (more is not None and more > 0) or (base_target is not None and n < base_target):
        attach = rng.randrange(n)
        size = rng.randint(2, params.max_block_size)
        block = [attach] + list(range(n, n + size - 1))
        add_block(block)
        n += size - 1
        if more is not None:
            more -= 1
    return Graph(n, edges, id_base=1)


def add_true_twins(g: Graph, params: GenParams) -> Graph:
    """Add 0..max_twins true twins to each vertex of g.

    A twin of v gets the closed neighbourhood of v at the moment it is
    added, so twins of one vertex are mutually adjacent and twins of
    adjacent vertices end up adjacent.  With a block graph input the result
    is strictly chordal by construction.
    """
    rng = _twin_rng(params)
    adj = [list(nbrs) for nbrs in g.adj]
    n = g.n
    for v in range(g.n):
        for _ in range(rng.randint(0, params.max_twins)):
            w = n
            n += 1
            closed = adj[v] + [v]
            adj.append(closed)
            for x in closed:
                adj[x].append(w)
    edges = ((u, w) for u in range(n) for w in adj[u] if w > u)
    return Graph(n, edges, id_base=1)


def random_strictly_chordal(params: GenParams) -> Graph:
    """Random block graph with true twins added."""
    return add_true_twins(random_block_graph(params), params)
