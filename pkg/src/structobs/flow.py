"""Vertex-disjoint source-to-sink paths for the memoryless-input placement.

The network has a virtual source ``"s"``, a virtual sink ``"t"``, one
ancillary node ``"a1" .. "a<alpha>"`` per target component, and the
augmented vertices as ints. Every augmented vertex and every ancillary
node carries unit capacity, enforced by splitting it into an in and an out
half; the direct input-to-sink arcs cost 1 and everything else costs 0, so
a minimum-cost maximum flow routes an input to a target component whenever
that can be done disjointly.
"""

from dataclasses import dataclass
from heapq import heappop, heappush

from .graph import Digraph

SOURCE = "s"
SINK = "t"


def ancillary(i):
    return f"a{i}"


@dataclass(frozen=True)
class FlowNetwork:
    """Logical network before node splitting.

    ``arcs`` are ``(tail, head, capacity, cost)`` tuples. ``literal_capacity``
    keeps the capacity each arc would have in the unsplit formulation (1 on
    input-to-sink arcs, 2 elsewhere); it is informational only.
    """

    vertex_count: int
    p: int
    targets: tuple
    arcs: tuple
    node_capacity: dict
    literal_capacity: dict


@dataclass(frozen=True)
class DisjointPaths:
    paths: tuple
    value: int
    cost: int

    def endpoints(self):
        """Last augmented vertex before the ancillary node or sink, per path."""
        return tuple(path[-3] if str(path[-2]).startswith("a") else path[-2] for path in self.paths)


def build_class1_network(g: Digraph, p: int, targets) -> FlowNetwork:
    """Network over the union digraph ``g`` with ``p`` inputs and the given target components."""
    arcs = []
    literal = {}

    def add(u, v, cost=0, literal_cap=2):
        arcs.append((u, v, 1, cost))
        literal[(u, v)] = literal_cap

    for d in range(1, p + 1):
        add(SOURCE, d)
    for u, v in g.edges():
        if u != v:
            add(u, v)
    for i, comp in enumerate(targets, start=1):
        for v in sorted(comp):
            add(v, ancillary(i))
        add(ancillary(i), SINK)
    for d in range(1, p + 1):
        add(d, SINK, cost=1, literal_cap=1)

    caps = {v: 1 for v in range(1, g.vertex_count + 1)}
    caps.update({ancillary(i): 1 for i in range(1, len(targets) + 1)})
    return FlowNetwork(g.vertex_count, p, tuple(frozenset(c) for c in targets), tuple(arcs), caps, literal)


class _Residual:
    def __init__(self, size):
        self.head = []
        self.cap = []
        self.cost = []
        self.out = [[] for _ in range(size)]

    def add(self, u, v, cap, cost):
        self.out[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(cap)
        self.cost.append(cost)
        self.out[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(0)
        self.cost.append(-cost)


def _node_key(label):
    # sort order: s, vertices ascending, ancillaries ascending, t
    if label == SOURCE:
        return (0, 0)
    if label == SINK:
        return (3, 0)
    if isinstance(label, str):
        return (2, int(label[1:]))
    return (1, label)


def max_flow_disjoint_paths(net: FlowNetwork) -> DisjointPaths:
    """Minimum-cost maximum flow on the split network, decomposed into paths.

    Successive shortest paths with Dijkstra on reduced costs; ties prefer
    lower-index nodes so the decomposition is reproducible.
    """
    labels = sorted({a[0] for a in net.arcs} | {a[1] for a in net.arcs} | {SOURCE, SINK}, key=_node_key)
    # split nodes get an in-half (even id) and an out-half (odd id)
    ids = {}
    for label in labels:
        ids[label] = len(ids)
    size = 2 * len(ids)
    split = set(net.node_capacity)

    def node_in(label):
        return 2 * ids[label]

    def node_out(label):
        return 2 * ids[label] + 1 if label in split else 2 * ids[label]

    res = _Residual(size)
    for label in labels:
        if label in split:
            res.add(node_in(label), node_out(label), net.node_capacity[label], 0)
    arc_edges = {}
    for u, v, cap, cost in sorted(net.arcs, key=lambda a: (_node_key(a[0]), _node_key(a[1]))):
        arc_edges[(u, v)] = len(res.head)
        res.add(node_out(u), node_in(v), cap, cost)
    for lst in res.out:
        lst.sort(key=lambda e: res.head[e])

    src, snk = node_out(SOURCE), node_in(SINK)
    pot = [0] * size
    value = 0
    total_cost = 0
    inf = float("inf")
    while True:
        dist = [inf] * size
        prev = [-1] * size
        dist[src] = 0
        heap = [(0, src)]
        while heap:
            d, u = heappop(heap)
            if d > dist[u]:
                continue
            for e in res.out[u]:
                if res.cap[e] <= 0:
                    continue
                v = res.head[e]
                nd = d + res.cost[e] + pot[u] - pot[v]
                if nd < dist[v]:
                    dist[v] = nd
                    prev[v] = e
                    heappush(heap, (nd, v))
        if dist[snk] == inf:
            break
        for v in range(size):
            if dist[v] < inf:
                pot[v] += dist[v]
        v = snk
        while v != src:
            e = prev[v]
            res.cap[e] -= 1
            res.cap[e ^ 1] += 1
            total_cost += res.cost[e]
            v = res.head[e ^ 1]
        value += 1

    # decomposition over logical arcs carrying flow
    flow = {arc: 1 - res.cap[e] for arc, e in arc_edges.items() if res.cap[e] == 0}
    succ = {}
    for (u, v) in sorted(flow, key=lambda a: (_node_key(a[0]), _node_key(a[1]))):
        succ.setdefault(u, []).append(v)
    paths = []
    for first in list(succ.get(SOURCE, [])):
        path = [SOURCE, first]
        node = first
        while node != SINK:
            nxt = succ[node].pop(0)
            path.append(nxt)
            node = nxt
        paths.append(tuple(path))
    return DisjointPaths(tuple(paths), value, total_cost)
