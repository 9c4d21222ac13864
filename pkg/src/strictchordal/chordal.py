"""Chordality recognition and clique-tree machinery.

Maximum-cardinality search yields a candidate perfect elimination ordering;
the follower test certifies it; the maximal cliques, the clique tree and the
minimal-vertex-separator multiset all fall out of one pass over the ordering.
The edge-heavy steps run on numpy arrays so large instances stay cheap.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

import numpy as np

from .errors import InternalError, NotChordalError, NotConnectedError
from .graph import Graph

try:
    import numba
except ImportError:  # pure-Python fallback below produces identical output
    numba = None


def _mcs_python(g: Graph) -> list[int]:
    n = g.n
    adj = g.adj
    # scaled[v] = weight(v) * n, or -1 once visited.  Heap entries encode
    # base - scaled[v] + v, so the smallest entry is the max-weight,
    # smallest-id vertex; stale entries are skipped on pop.
    scaled = [0] * n
    base = (n - 1) * n
    heap = list(range(base, base + n))
    pop = heapq.heappop
    push = heapq.heappush
    visit = []
    append = visit.append
    for _ in range(n):
        while True:
            entry = pop(heap)
            v = entry % n
            if scaled[v] == base - entry + v:
                break
        scaled[v] = -1
        append(v)
        for u in adj[v]:
            su = scaled[u]
            if su >= 0:
                su += n
                scaled[u] = su
                push(heap, base - su + u)
    visit.reverse()
    return visit


if numba is not None:

    @numba.njit(cache=True)
    def _mcs_kernel(indptr, indices):  # pragma: no cover - exercised via mcs_order
        n = indptr.shape[0] - 1
        base = (n - 1) * n
        scaled = np.zeros(n, dtype=np.int64)
        capacity = n + indices.shape[0] // 2 + 1
        heap = np.empty(capacity, dtype=np.int64)
        for v in range(n):  # base + 0..n-1 is already a valid min-heap
            heap[v] = base + v
        size = n
        visit = np.empty(n, dtype=np.int64)
        for k in range(n):
            while True:
                entry = heap[0]
                size -= 1
                last = heap[size]
                # sift down the last element
                i = 0
                child = 1
                while child < size:
                    if child + 1 < size and heap[child + 1] < heap[child]:
                        child += 1
                    if heap[child] < last:
                        heap[i] = heap[child]
                        i = child
                        child = 2 * i + 1
                    else:
                        break
                heap[i] = last
                v = entry % n
                if scaled[v] == base - entry + v:
                    break
            scaled[v] = -1
            visit[n - 1 - k] = v  # reversed visit order is the candidate PEO
            for j in range(indptr[v], indptr[v + 1]):
                u = indices[j]
                su = scaled[u]
                if su >= 0:
                    su += n
                    scaled[u] = su
                    # sift up the new entry
                    entry = base - su + u
                    i = size
                    size += 1
                    while i > 0:
                        up = (i - 1) >> 1
                        if entry < heap[up]:
                            heap[i] = heap[up]
                            i = up
                        else:
                            break
                    heap[i] = entry
        return visit


def mcs_order(g: Graph) -> list[int]:
    """Maximum-cardinality-search ordering of g.

    The result is a perfect elimination ordering iff g is chordal.  Ties fall
    to the smallest vertex id, so the first visited vertex is vertex 0 and it
    ends up last in the ordering.
    """
    n = g.n
    if n == 0:
        return []
    if numba is not None:
        indptr, indices = g.csr()
        return _mcs_kernel(indptr, indices).tolist()
    return _mcs_python(g)


def _later_orientation(g: Graph, order):
    """Orient each edge toward the later endpoint of ``order``.

    Returns (pos, sizes, follower, indptr, later) where ``later`` holds the
    later neighbours of every vertex, grouped by vertex and sorted by
    position, ``sizes`` the group lengths, and ``follower[v]`` the later
    neighbour of v with the smallest position (-1 if none).
    """
    n = g.n
    csr_indptr, csr_indices = g.csr()
    pos = np.empty(n, dtype=np.int64)
    pos[np.asarray(order, dtype=np.int64)] = np.arange(n, dtype=np.int64)
    tails = np.repeat(np.arange(n, dtype=np.int64), np.diff(csr_indptr))
    keep = pos[csr_indices] > pos[tails]
    t = tails[keep]
    h = csr_indices[keep]
    sort = np.lexsort((pos[h], t))
    t = t[sort]
    h = h[sort]
    sizes = np.bincount(t, minlength=n).astype(np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(sizes, out=indptr[1:])
    follower = np.full(n, -1, dtype=np.int64)
    nonempty = sizes > 0
    follower[nonempty] = h[indptr[:-1][nonempty]]
    return pos, sizes, follower, indptr, h


def _peo_violations(g: Graph, sizes, follower, indptr, later):
    """Triples (u, follower(u), w) violating the follower test.

    Empty arrays iff the underlying order is a perfect elimination ordering:
    every later neighbour of u other than its follower must be adjacent to
    the follower.
    """
    n = g.n
    csr_indptr, csr_indices = g.csr()
    u_all = np.repeat(np.arange(n, dtype=np.int64), sizes)
    slot_first = np.zeros(len(later), dtype=bool)
    slot_first[indptr[:-1][sizes > 0]] = True
    u = u_all[~slot_first]
    w = later[~slot_first]
    if len(u) == 0:
        return u, u, u
    fu = follower[u]
    # Edge keys are already sorted: tails ascend and neighbour lists are sorted.
    keys = np.repeat(np.arange(n, dtype=np.int64), np.diff(csr_indptr)) * n + csr_indices
    quer = fu * n + w
    ins = np.searchsorted(keys, quer)
    ins_c = np.minimum(ins, len(keys) - 1)
    found = (ins < len(keys)) & (keys[ins_c] == quer)
    bad = ~found
    return u[bad], fu[bad], w[bad]


def _check_permutation(g: Graph, order) -> np.ndarray:
    arr = np.asarray(order, dtype=np.int64)
    if len(arr) != g.n or not np.array_equal(np.sort(arr), np.arange(g.n)):
        raise ValueError("order is not a permutation of the vertices")
    return arr


def is_mcs_order(g: Graph, order) -> bool:
    """True iff some maximum-cardinality-search run visits reversed(order).

    Replays the search: each visited vertex must carry the maximum weight
    (visited-neighbour count) among unvisited vertices at its turn.  The
    clique-tree construction is only correct for such orderings; a perfect
    elimination ordering that no MCS run produces can group cliques wrongly.
    """
    n = g.n
    adj = g.adj
    weight = [0] * n
    unvisited_at = [0] * (n + 1)  # unvisited vertices per weight value
    unvisited_at[0] = n
    maxw = 0
    visited = [False] * n
    for v in reversed(order):
        while maxw > 0 and unvisited_at[maxw] == 0:
            maxw -= 1
        wv = weight[v]
        if wv != maxw or visited[v]:
            return False
        visited[v] = True
        unvisited_at[wv] -= 1
        for u in adj[v]:
            if not visited[u]:
                wu = weight[u]
                unvisited_at[wu] -= 1
                wu += 1
                weight[u] = wu
                unvisited_at[wu] += 1
                if wu > maxw:
                    maxw = wu
    return True


def verify_peo(g: Graph, order) -> bool:
    """True iff ``order`` is a perfect elimination ordering of g."""
    _check_permutation(g, order)
    pos, sizes, follower, indptr, later = _later_orientation(g, order)
    u, _, _ = _peo_violations(g, sizes, follower, indptr, later)
    return len(u) == 0


def find_chordless_cycle(g: Graph, u: int, a: int, b: int):
    """Chordless cycle through u given non-adjacent a, b in N(u), or None.

    The interior of the cycle is a shortest a-b path avoiding N[u] outside
    {a, b}; shortest paths are induced, and u sees only a and b on the cycle.
    """
    blocked = set(g.adj[u])
    blocked.add(u)
    blocked.discard(a)
    blocked.discard(b)
    parent = {a: None}
    queue = [a]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        if v == b:
            break
        for x in g.adj[v]:
            if x not in blocked and x not in parent:
                parent[x] = v
                queue.append(x)
    if b not in parent:
        return None
    path = []
    v = b
    while v is not None:
        path.append(v)
        v = parent[v]
    path.append(u)  # cycle: u, a, ..., b back to u
    path.reverse()
    return path


@dataclass
class CliqueTree:
    """Maximal cliques of a connected chordal graph and a clique tree.

    Cliques are stored in CSR form: clique q occupies
    ``clique_indices[clique_indptr[q]:clique_indptr[q+1]]``, representative
    vertex first and the overlap with the parent clique (the separator of the
    edge toward it, ``sep_len[q]`` vertices) last.  Tree edge e joins
    ``edge_child[e]`` to ``edge_parent[e]``.
    """

    n_vertices: int
    peo: list[int]
    clique_indptr: np.ndarray
    clique_indices: np.ndarray
    sep_len: np.ndarray
    edge_child: np.ndarray
    edge_parent: np.ndarray
    _cliques: list | None = field(default=None, repr=False)

    @property
    def n_cliques(self) -> int:
        return len(self.clique_indptr) - 1

    def clique(self, q: int) -> np.ndarray:
        return self.clique_indices[self.clique_indptr[q]:self.clique_indptr[q + 1]]

    def clique_size(self, q: int) -> int:
        return int(self.clique_indptr[q + 1] - self.clique_indptr[q])

    def separator_slice(self, e: int) -> np.ndarray:
        child = self.edge_child[e]
        end = self.clique_indptr[child + 1]
        return self.clique_indices[end - self.sep_len[child]:end]

    @property
    def cliques(self) -> list[frozenset]:
        if self._cliques is None:
            self._cliques = [frozenset(self.clique(q).tolist()) for q in range(self.n_cliques)]
        return self._cliques

    @property
    def tree_edges(self) -> list[tuple[int, int, frozenset]]:
        return [
            (int(self.edge_child[e]), int(self.edge_parent[e]),
             frozenset(self.separator_slice(e).tolist()))
            for e in range(len(self.edge_child))
        ]


def build_clique_tree(g: Graph, order=None) -> CliqueTree:
    """Maximal cliques and a clique tree of a connected chordal graph.

    ``order`` defaults to ``mcs_order(g)`` and must otherwise be a
    maximum-cardinality-search ordering (any tie-breaking); orderings that no
    MCS run produces are rejected with ValueError, since the greedy clique
    grouping is only correct for them.  Chordality is always re-verified and
    NotChordalError (carrying a chordless-cycle witness when one could be
    recovered) raised on failure.  Cliques appear in the order their
    representatives are visited; each non-root clique is attached to the
    clique its representative's follower was numbered into.
    """
    if order is None:
        order = mcs_order(g)
    else:
        _check_permutation(g, order)
        if not is_mcs_order(g, order):
            raise ValueError("order is not a maximum-cardinality-search ordering")
    return _clique_tree_from_mcs(g, order)


def _clique_tree_from_mcs(g: Graph, order) -> CliqueTree:
    pos, sizes, follower, indptr, later = _later_orientation(g, order)
    # a connected graph has exactly one vertex without later neighbours (the
    # last of the ordering); each extra one starts another component
    if g.n == 0 or int((sizes == 0).sum()) != 1:
        raise NotConnectedError("clique tree requires a connected graph")
    bad_u, bad_f, bad_w = _peo_violations(g, sizes, follower, indptr, later)
    if len(bad_u):
        cycle = None
        for u, a, b in zip(bad_u.tolist(), bad_f.tolist(), bad_w.tolist()):
            cycle = find_chordless_cycle(g, u, a, b)
            if cycle is not None:
                break
        raise NotChordalError("graph is not chordal", cycle=cycle)

    n = g.n
    sizes_l = sizes.tolist()
    follower_l = follower.tolist()
    clique_of = [0] * n
    reps = []
    edge_child = []
    edge_parent = []
    cur = -1
    cur_size = 0
    for v in reversed(order):
        sv = sizes_l[v]
        if cur >= 0 and sv == cur_size:
            clique_of[v] = cur
            cur_size += 1
        else:
            if sv > cur_size:
                raise InternalError("MCS weight exceeded the current clique size")
            cur = len(reps)
            reps.append(v)
            clique_of[v] = cur
            cur_size = sv + 1
            if sv > 0:
                edge_child.append(cur)
                edge_parent.append(clique_of[follower_l[v]])

    # clique q = vertices numbered into it + the overlap its representative
    # shares with the parent clique (the representative's later neighbours)
    reps_arr = np.asarray(reps, dtype=np.int64)
    clique_arr = np.asarray(clique_of, dtype=np.int64)
    k = len(reps)
    assigned_counts = np.bincount(clique_arr, minlength=k)
    madj_lens = sizes[reps_arr]
    out_indptr = np.zeros(k + 1, dtype=np.int64)
    np.cumsum(assigned_counts + madj_lens, out=out_indptr[1:])
    out = np.empty(int(out_indptr[-1]), dtype=np.int64)
    # vertices grouped by clique, visit order within (representative first)
    assigned = np.lexsort((-pos, clique_arr))
    a_grp = clique_arr[assigned]
    a_within = np.arange(n, dtype=np.int64) - np.repeat(
        np.cumsum(assigned_counts) - assigned_counts, assigned_counts)
    out[out_indptr[a_grp] + a_within] = assigned
    total_madj = int(madj_lens.sum())
    if total_madj:
        grp = np.repeat(np.arange(k, dtype=np.int64), madj_lens)
        within = np.arange(total_madj, dtype=np.int64) - np.repeat(
            np.cumsum(madj_lens) - madj_lens, madj_lens)
        out[out_indptr[grp] + assigned_counts[grp] + within] = \
            later[indptr[reps_arr][grp] + within]
    return CliqueTree(
        n_vertices=n,
        peo=list(order),
        clique_indptr=out_indptr,
        clique_indices=out,
        sep_len=madj_lens,
        edge_child=np.asarray(edge_child, dtype=np.int64),
        edge_parent=np.asarray(edge_parent, dtype=np.int64),
    )


@dataclass(frozen=True)
class SeparatorInfo:
    """One distinct minimal vertex separator of a chordal graph.

    ``multiplicity`` counts the clique-tree edges labelled with it,
    ``adjacent_cliques`` the cliques incident to those edges (for strictly
    chordal graphs: all cliques containing it), and ``boundary_count`` how
    many adjacent cliques are boundary cliques, detected as cliques incident
    to exactly one distinct separator.
    """

    vertices: frozenset
    multiplicity: int
    adjacent_cliques: tuple
    boundary_count: int


def minimal_vertex_separators(ct: CliqueTree) -> list[SeparatorInfo]:
    """Distinct minimal vertex separators with multiplicities.

    Separators are grouped by content (rows padded to the largest separator
    size and deduplicated); the multiplicities sum to the number of tree
    edges.  The result is sorted by smallest contained vertex.
    """
    n_edges = len(ct.edge_child)
    if n_edges == 0:
        return []
    n_cliques = ct.n_cliques
    indptr = ct.clique_indptr
    indices = ct.clique_indices
    lens = ct.sep_len[ct.edge_child]
    starts = indptr[ct.edge_child + 1] - lens
    total = int(lens.sum())
    grp = np.repeat(np.arange(n_edges, dtype=np.int64), lens)
    within = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(lens) - lens, lens)
    vals = indices[starts[grp] + within]
    # sort each edge's separator content; blocks stay contiguous, so the
    # within-block slot indices are unchanged
    vals = vals[np.lexsort((vals, grp))]
    width = int(lens.max())
    mat = np.full((n_edges, width), -1, dtype=np.int64)
    mat[grp, within] = vals
    rows, inverse = np.unique(mat, axis=0, return_inverse=True)
    sid = inverse.reshape(-1)
    n_seps = len(rows)
    mult = np.bincount(sid, minlength=n_seps)
    # unique (clique, separator) incidences from both edge endpoints
    pair_keys = np.unique(
        np.concatenate((ct.edge_child, ct.edge_parent)) * n_seps
        + np.concatenate((sid, sid))
    )
    pair_clique = pair_keys // n_seps
    pair_sid = pair_keys % n_seps
    # boundary cliques contain exactly one distinct separator
    leaf = np.bincount(pair_clique, minlength=n_cliques) == 1
    boundary = np.bincount(pair_sid[leaf[pair_clique]], minlength=n_seps)
    adj_order = np.argsort(pair_sid, kind="stable")
    adj_cliques = pair_clique[adj_order].tolist()
    adj_indptr = np.zeros(n_seps + 1, dtype=np.int64)
    np.cumsum(np.bincount(pair_sid, minlength=n_seps), out=adj_indptr[1:])
    adj_indptr = adj_indptr.tolist()

    rows_l = rows.tolist()
    lens_l = (rows >= 0).sum(axis=1).tolist()
    mult_l = mult.tolist()
    boundary_l = boundary.tolist()
    return [
        SeparatorInfo(
            vertices=frozenset(rows_l[s][:lens_l[s]]),
            multiplicity=mult_l[s],
            adjacent_cliques=tuple(adj_cliques[adj_indptr[s]:adj_indptr[s + 1]]),
            boundary_count=boundary_l[s],
        )
        for s in range(n_seps)
    ]
