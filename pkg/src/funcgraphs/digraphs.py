"""Finite digraph templates: countdown digraphs, ergodicity, walks.

Templates are small directed graphs (loops allowed, no parallel edges)
used as homomorphism targets.  The central classification splits
sinkless templates into three classes: those with a loop, loopless ones
that are ergodic, and the rest.

A digraph is ergodic when some vertex v admits closed walks of every
length >= some threshold.  Equivalently, some strongly connected
component containing at least one edge has cycle-length gcd 1.  The
threshold search is bounded by the Wielandt bound m^2 - 2m + 2 (plus m
slack): beyond it, a primitive component admits closed walks of every
length, so a bounded scan determines the exact minimum.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from .partition import Partition


class TemplateClass(enum.Enum):
    LOOP = "loop"
    ERGODIC_NO_LOOP = "ergodic_no_loop"
    NON_ERGODIC = "non_ergodic"


@dataclass(frozen=True)
class ErgodicWitness:
    """Vertex admitting closed walks of every length >= threshold."""

    vertex: int
    threshold: int


def wielandt_bound(m: int) -> int:
    return m * m - 2 * m + 2


class Digraph:
    """Digraph on vertices 0..m-1 with an edge set (loops allowed)."""

    def __init__(self, m: int, edges: Iterable[tuple[int, int]]):
        if m < 1:
            raise ValueError("m must be >= 1")
        es = set()
        for u, v in edges:
            if not (0 <= u < m and 0 <= v < m):
                raise ValueError(f"edge ({u}, {v}) out of range for m={m}")
            es.add((u, v))
        self.m = m
        self.edges: frozenset[tuple[int, int]] = frozenset(es)
        self._adj: list[list[int]] | None = None
        self._radj: list[list[int]] | None = None

    @classmethod
    def from_json_dict(cls, d: dict) -> "Digraph":
        m = d["m"]
        raw = d["edges"]
        seen = set()
        for e in raw:
            t = (e[0], e[1])
            if t in seen:
                raise ValueError(f"duplicate edge {t}")
            seen.add(t)
        return cls(m, seen)

    def to_json_dict(self) -> dict:
        return {"m": self.m, "edges": [list(e) for e in sorted(self.edges)]}

    def to_dot(self) -> str:
        lines = ["digraph h {"]
        for i in range(self.m):
            lines.append(f"  {i};")
        for u, v in sorted(self.edges):
            lines.append(f"  {u} -> {v};")
        lines.append("}")
        return "\n".join(lines)

    # ---- adjacency ----

    def adj(self) -> list[list[int]]:
        if self._adj is None:
            a: list[list[int]] = [[] for _ in range(self.m)]
            for u, v in sorted(self.edges):
                a[u].append(v)
            self._adj = a
        return self._adj

    def radj(self) -> list[list[int]]:
        if self._radj is None:
            a: list[list[int]] = [[] for _ in range(self.m)]
            for u, v in sorted(self.edges):
                a[v].append(u)
            self._radj = a
        return self._radj

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def loop_vertices(self) -> list[int]:
        return sorted(u for u, v in self.edges if u == v)

    def is_sinkless(self) -> bool:
        return all(self.adj()[v] for v in range(self.m))

    def is_sourceless(self) -> bool:
        return all(self.radj()[v] for v in range(self.m))

    def induced(self, vertices: Sequence[int]) -> tuple["Digraph", list[int]]:
        """Induced subgraph; returns it with the old labels of its vertices."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        es = [(index[u], index[v]) for u, v in self.edges
              if u in index and v in index]
        return Digraph(len(keep), es), keep

    # ---- strong components and periods ----

    def scc(self) -> Partition:
        """Strongly connected components (iterative Tarjan)."""
        m = self.m
        adj = self.adj()
        index = [-1] * m
        low = [0] * m
        on_stack = [False] * m
        stack: list[int] = []
        comp = [-1] * m
        counter = 0
        ncomp = 0
        for root in range(m):
            if index[root] != -1:
                continue
            work = [(root, 0)]
            while work:
                v, ei = work[-1]
                if ei == 0:
                    index[v] = low[v] = counter
                    counter += 1
                    stack.append(v)
                    on_stack[v] = True
                advanced = False
                for j in range(ei, len(adj[v])):
                    w = adj[v][j]
                    if index[w] == -1:
                        work[-1] = (v, j + 1)
                        work.append((w, 0))
                        advanced = True
                        break
                    if on_stack[w]:
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                if low[v] == index[v]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = ncomp
                        if w == v:
                            break
                    ncomp += 1
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
        return Partition({v: comp[v] for v in range(m)})

    def component_period(self, component: Sequence[int]) -> int | None:
        """gcd of cycle lengths inside a strong component, None if edgeless."""
        comp = set(component)
        inner = [(u, v) for u, v in self.edges if u in comp and v in comp]
        if not inner:
            return None
        root = min(comp)
        level = {root: 0}
        frontier = [root]
        adj = self.adj()
        while frontier:
            nxt = []
            for u in frontier:
                for v in adj[u]:
                    if v in comp and v not in level:
                        level[v] = level[u] + 1
                        nxt.append(v)
            frontier = nxt
        g = 0
        for u, v in inner:
            g = gcd(g, level[u] + 1 - level[v])
        return abs(g)

    # ---- ergodicity ----

    def closed_walk_lengths(self, v: int, max_len: int) -> set[int]:
        """Lengths k <= max_len of closed walks at v (0 included)."""
        adj = self.adj()
        reach = {v}
        lengths = {0}
        for k in range(1, max_len + 1):
            nxt: set[int] = set()
            for u in reach:
                nxt.update(adj[u])
            reach = nxt
            if v in reach:
                lengths.add(k)
            if not reach:
                break
        return lengths

    def is_ergodic(self) -> ErgodicWitness | None:
        """Witness vertex with closed walks of every sufficient length.

        Returns the witness minimizing (threshold, vertex), or None when
        no strong component with an edge is aperiodic.
        """
        candidates: list[int] = []
        for component in self.scc():
            g = self.component_period(component)
            if g == 1:
                candidates.extend(component)
        if not candidates:
            return None
        limit = wielandt_bound(self.m) + self.m
        best: ErgodicWitness | None = None
        for v in sorted(candidates):
            lengths = self.closed_walk_lengths(v, limit)
            threshold = 0
            for k in range(limit, -1, -1):
                if k not in lengths:
                    threshold = k + 1
                    break
            if best is None or (threshold, v) < (best.threshold, best.vertex):
                best = ErgodicWitness(v, threshold)
        return best

    def reach_all_threshold(self, v0: int) -> int:
        """Least l such that paths of every length >= l from v0 reach
        every vertex.

        Requires the digraph to be strongly connected and ergodic.
        """
        if self.scc().num_classes != 1:
            raise ValueError("digraph is not strongly connected")
        if self.component_period(range(self.m)) != 1:
            raise ValueError("digraph is not ergodic")
        adj = self.adj()
        everyone = frozenset(range(self.m))
        limit = wielandt_bound(self.m) + self.m
        reach = {v0}
        worst = -1
        for k in range(1, limit + 1):
            nxt: set[int] = set()
            for u in reach:
                nxt.update(adj[u])
            reach = nxt
            if reach != everyone:
                worst = k
        if len(reach) != self.m and self.m > 1:
            raise ValueError("no full-reach length within the search bound")
        if self.m == 1:
            return 0
        return worst + 1


class GraphShapeError(ValueError):
    """A template violates a structural precondition (e.g. has a sink)."""


def classify(h: Digraph) -> TemplateClass:
    """Three-way split of sinkless templates.

    Loop templates are solvable with constant labelings; loopless
    ergodic ones by symmetry-breaking constructions; the remainder
    require global coordination.
    """
    if not h.is_sinkless():
        raise GraphShapeError("template has a sink; classification undefined")
    if h.has_loop():
        return TemplateClass.LOOP
    if h.is_ergodic() is not None:
        return TemplateClass.ERGODIC_NO_LOOP
    return TemplateClass.NON_ERGODIC


def countdown_digraph(spacing: int, top: int) -> Digraph:
    """Digraph on 0..top: edges k -> k-1 for k > 0, and 0 -> l for every
    l >= spacing.

    Vertices count down to 0 and then reset to at least ``spacing``.
    """
    if spacing < 1:
        raise ValueError("spacing must be >= 1")
    if top < spacing + 1:
        raise ValueError("top must be >= spacing + 1 so that 0 has an edge "
                         "and resets can vary")
    edges = [(k, k - 1) for k in range(1, top + 1)]
    edges += [(0, l) for l in range(spacing, top + 1)]
    return Digraph(top + 1, edges)


# ---- walks and walk powers ----

def parse_walk(s: str) -> str:
    """Validate a walk string over 'f' (forward) and 'b' (backward)."""
    if not s:
        raise ValueError("walk must be nonempty")
    t = s.lower()
    if any(c not in "fb" for c in t):
        raise ValueError(f"walk may only contain 'f' and 'b': {s!r}")
    return t


def power_walk(h: Digraph, walk: str) -> Digraph:
    """Digraph with an edge (x, y) iff the walk is realizable from x to y.

    Forward steps traverse edges head-wards, backward steps tail-wards.
    """
    walk = parse_walk(walk)
    adj = h.adj()
    radj = h.radj()
    cur: list[set[int]] = [{x} for x in range(h.m)]
    for step in walk:
        table = adj if step == "f" else radj
        for x in range(h.m):
            nxt: set[int] = set()
            for v in cur[x]:
                nxt.update(table[v])
            cur[x] = nxt
    edges = [(x, y) for x in range(h.m) for y in cur[x]]
    return Digraph(h.m, edges)


def path_of_length(h: Digraph, u: int, w: int, length: int) -> list[int] | None:
    """Lexicographically least directed path (as a vertex list) of the
    exact length from u to w, or None."""
    if length < 0:
        raise ValueError("length must be >= 0")
    radj = h.radj()
    can: list[set[int]] = [{w}]
    for _ in range(length):
        prev: set[int] = set()
        for v in can[-1]:
            prev.update(radj[v])
        can.append(prev)
    if u not in can[length]:
        return None
    path = [u]
    v = u
    adj = h.adj()
    for k in range(length, 0, -1):
        v = min(x for x in adj[v] if x in can[k - 1])
        path.append(v)
    return path
