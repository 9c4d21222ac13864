"""Toughness, scattering number and scattering sets of strictly chordal graphs.

For a non-complete strictly chordal graph the toughness is the minimum of
|S| / (mu(S) + 1) over the minimal vertex separators.  The scattering number
splits into cases: a single separator gives mu(S) + 1 - |S| directly; with
toughness >= 1 the maximum of mu(S) + 1 - |S| is attained at one separator;
with toughness < 1 the answer is 1 when every separator satisfies
|S| >= mu(S), and otherwise a scattering set is assembled by a post-order
search over the clique/separator tree.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .chordal import SeparatorInfo, _clique_tree_from_mcs, mcs_order, minimal_vertex_separators
from .errors import CompleteGraphError, NotStrictlyChordalError
from .graph import Graph, connected_components
from .recognition import FALSE_CLIQUE, MVS, build_cb, separator_overlap

CASE_COMPLETE = "complete"
CASE_SINGLE_MVS = "single_mvs"
CASE_TOUGH_GE_1 = "tough_ge_1"
CASE_TYPE_A = "type_a"
CASE_TYPE_B = "type_b"


@dataclass(frozen=True)
class VulnerabilityReport:
    """Result of a full analysis.

    ``toughness`` is an exact Fraction, or None for complete graphs
    (infinite); ``scattering_number`` is likewise None when undefined.
    ``separators`` echoes the separator table the numbers were derived from,
    and ``timings`` holds per-stage wall times in seconds.
    """

    case: str
    toughness: Fraction | None
    tough_set: frozenset
    scattering_number: int | None
    scattering_set: frozenset
    clique_count: int
    separators: tuple = ()
    timings: dict = field(default_factory=dict, compare=False)


def toughness(seps) -> tuple[Fraction, frozenset]:
    """Exact toughness and a tough set; raises CompleteGraphError if there
    are no separators (toughness is infinite).  Ties fall to the separator
    with the smallest contained vertex."""
    if not seps:
        raise CompleteGraphError("complete graph: toughness is infinite")
    best_num = best_den = 0
    best_set = None
    for info in seps:
        num = len(info.vertices)
        den = info.multiplicity + 1
        # num/den < best_num/best_den by cross multiplication, exactly
        if best_set is None or num * best_den < best_num * den:
            best_num = num
            best_den = den
            best_set = info.vertices
    return Fraction(best_num, best_den), best_set


def classify(seps) -> str:
    """Dispatch case for the scattering-number computation."""
    if not seps:
        return CASE_COMPLETE
    if len(seps) == 1:
        return CASE_SINGLE_MVS
    if all(len(info.vertices) >= info.multiplicity + 1 for info in seps):
        return CASE_TOUGH_GE_1
    if all(len(info.vertices) >= info.multiplicity for info in seps):
        return CASE_TYPE_A
    return CASE_TYPE_B


def scattering_single_mvs(info: SeparatorInfo) -> tuple[int, frozenset]:
    """Scattering number when the graph has exactly one separator."""
    return info.multiplicity + 1 - len(info.vertices), info.vertices


def scattering_tough_ge_1(seps) -> tuple[int, frozenset]:
    """Scattering number when every separator has |S| >= mu(S) + 1.

    The maximum of mu(S) + 1 - |S| is attained at a single separator; ties
    fall to the separator with the smallest contained vertex."""
    best = None
    best_set = None
    for info in seps:
        value = info.multiplicity + 1 - len(info.vertices)
        if best is None or value > best:
            best = value
            best_set = info.vertices
    return best, best_set


def scattering_type_a(seps) -> tuple[int, frozenset]:
    """Scattering number 1; the witness is the first separator with
    |S| = mu(S), which exists whenever toughness < 1 and no separator has
    |S| < mu(S)."""
    for info in seps:
        if len(info.vertices) == info.multiplicity:
            return 1, info.vertices
    raise ValueError("not a type A instance: no separator with |S| = mu(S)")


def scattering_set_type_b(cb) -> frozenset:
    """Scattering set of a type B graph via post-order search of the
    clique/separator tree.

    Rooted at the smallest-id separator node, children visited in ascending
    node id.  On leaving a separator node v (non-root) with card(v) < mu(v),
    v joins the set and its parent clique either shrinks by card(v) or, when
    it consisted of exactly v's and the grandparent's separators, is marked
    dead; dead cliques decrement their parent separator's multiplicity on
    exit.  mu may go negative; the comparison then simply fails.
    """
    q = cb.n_cliques
    root = q
    card = cb.card
    mu = cb.mu
    status = cb.status
    entry = cb.entry
    parent = cb.parent
    indptr = cb.indptr
    nbrs = cb.neighbors
    counter = 1
    entry[root] = 1
    stack_node = [root]
    stack_ptr = [indptr[root]]
    stack_end = [indptr[root + 1]]
    picked = []
    while stack_node:
        v = stack_node[-1]
        p = stack_ptr[-1]
        if p < stack_end[-1]:
            stack_ptr[-1] = p + 1
            w = nbrs[p]
            if entry[w] == 0:
                counter += 1
                entry[w] = counter
                parent[w] = v
                stack_node.append(w)
                stack_ptr.append(indptr[w])
                stack_end.append(indptr[w + 1])
            continue
        stack_node.pop()
        stack_ptr.pop()
        stack_end.pop()
        if status[v] != MVS:
            if status[v] == FALSE_CLIQUE:
                mu[parent[v]] -= 1
        elif v != root:
            if card[v] < mu[v]:
                picked.append(v)
                pv = parent[v]
                if card[pv] == card[v] + card[parent[pv]]:
                    status[pv] = FALSE_CLIQUE
                else:
                    card[pv] -= card[v]
    if card[root] < mu[root]:
        picked.append(root)
    result = set()
    for v in picked:
        result.update(cb.separators[v - q].vertices)
    return frozenset(result)


def analyze(g: Graph) -> VulnerabilityReport:
    """Full pipeline: connectivity, chordality, strict chordality, toughness,
    case dispatch and the case's scattering computation.

    Raises NotConnectedError, NotChordalError or NotStrictlyChordalError
    (each with a witness where available).  Complete graphs report infinite
    toughness and an undefined scattering number.
    """
    timings = {}
    tick = time.perf_counter()
    order = mcs_order(g)
    timings["mcs"] = time.perf_counter() - tick

    # connectivity is certified inside the clique-tree construction (exactly
    # one vertex of a connected graph lacks later neighbours), so no separate
    # traversal is needed; NotConnectedError precedes the chordality check.
    # The order comes fresh from mcs_order, so the MCS replay is skipped.
    tick = time.perf_counter()
    ct = _clique_tree_from_mcs(g, order)
    timings["clique_tree"] = time.perf_counter() - tick

    tick = time.perf_counter()
    seps = minimal_vertex_separators(ct)
    timings["separators"] = time.perf_counter() - tick

    tick = time.perf_counter()
    overlap = separator_overlap(seps)
    if overlap is not None:
        v, first, second = overlap
        raise NotStrictlyChordalError(
            "two minimal vertex separators share a vertex",
            vertex=v,
            separators=(first, second),
        )
    timings["recognition"] = time.perf_counter() - tick

    tick = time.perf_counter()
    case = classify(seps)
    if case == CASE_COMPLETE:
        timings["vulnerability"] = time.perf_counter() - tick
        return VulnerabilityReport(
            case=case,
            toughness=None,
            tough_set=frozenset(),
            scattering_number=None,
            scattering_set=frozenset(),
            clique_count=ct.n_cliques,
            separators=(),
            timings=timings,
        )
    tau, tough_set = toughness(seps)
    if case == CASE_SINGLE_MVS:
        sc, sc_set = scattering_single_mvs(seps[0])
    elif case == CASE_TOUGH_GE_1:
        sc, sc_set = scattering_tough_ge_1(seps)
    elif case == CASE_TYPE_A:
        sc, sc_set = scattering_type_a(seps)
    else:
        cb = build_cb(ct, seps)
        sc_set = scattering_set_type_b(cb)
        count, _ = connected_components(g, sc_set)
        sc = count - len(sc_set)
    timings["vulnerability"] = time.perf_counter() - tick
    return VulnerabilityReport(
        case=case,
        toughness=tau,
        tough_set=tough_set,
        scattering_number=sc,
        scattering_set=sc_set,
        clique_count=ct.n_cliques,
        separators=tuple(seps),
        timings=timings,
    )
