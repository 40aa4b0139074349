"""Independent brute-force implementations used as ground truth.

Everything here is written against the definitions directly (BFS,
matrix powers, exhaustive search) and deliberately avoids the library's
own algorithms, so agreement is meaningful.
"""

from __future__ import annotations

import itertools
from collections import deque
from math import gcd

import numpy as np


# ---- undirected metric on functional graphs ----

def undirected_adj(succ: list[int | None]) -> list[list[int]]:
    n = len(succ)
    adj: list[list[int]] = [[] for _ in range(n)]
    for x, y in enumerate(succ):
        if y is not None:
            adj[x].append(y)
            adj[y].append(x)
    return adj


def bfs_dists(succ: list[int | None], source: int) -> list[int | None]:
    adj = undirected_adj(succ)
    dist: list[int | None] = [None] * len(succ)
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if dist[v] is None:
                dist[v] = dist[u] + 1
                q.append(v)
    return dist


def bfs_distance(succ: list[int | None], x: int, y: int) -> int | None:
    return bfs_dists(succ, x)[y]


def bfs_ball(succ: list[int | None], x: int, radius: int) -> set[int]:
    d = bfs_dists(succ, x)
    return {v for v, dv in enumerate(d) if dv is not None and dv <= radius}


def naive_class_diameter(succ: list[int | None], cls: set[int]) -> int:
    best = 0
    for x in cls:
        d = bfs_dists(succ, x)
        for y in cls:
            dy = d[y]
            assert dy is not None, "class not connected"
            best = max(best, dy)
    return best


def naive_proximity_classes(succ: list[int | None], subset: set[int],
                            radius: int) -> list[frozenset[int]]:
    """Transitive closure of 'within radius' via pairwise BFS."""
    members = sorted(subset)
    parent = {x: x for x in members}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for x in members:
        d = bfs_dists(succ, x)
        for y in members:
            if y > x and d[y] is not None and d[y] <= radius:
                ra, rb = find(x), find(y)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, set[int]] = {}
    for x in members:
        groups.setdefault(find(x), set()).add(x)
    return [frozenset(v) for v in groups.values()]


# ---- forward-orbit facts ----

def naive_forward_iterates(succ: list[int | None], x: int) -> int | None:
    """Defined forward steps from x; None when the orbit cycles."""
    seen = {x}
    count = 0
    v = x
    while succ[v] is not None:
        v = succ[v]
        if v in seen:
            return None
        seen.add(v)
        count += 1
    return count


def naive_least_hit(succ: list[int | None], x: int,
                    members: set[int], cap: int) -> int | None:
    """Least k in 1..cap with the k-th iterate of x a member."""
    v = x
    for k in range(1, cap + 1):
        if succ[v] is None:
            return None
        v = succ[v]
        if v in members:
            return k
    return None


# ---- digraph facts by boolean matrix powers ----

def adjacency_matrix(m: int, edges: list[tuple[int, int]]) -> np.ndarray:
    a = np.zeros((m, m), dtype=bool)
    for u, v in edges:
        a[u, v] = True
    return a


def closed_walk_lengths_oracle(m: int, edges: list[tuple[int, int]],
                               v: int, max_len: int) -> set[int]:
    a = adjacency_matrix(m, edges)
    out = set()
    p = np.eye(m, dtype=bool)
    for k in range(1, max_len + 1):
        p = (p @ a)
        if p[v, v]:
            out.add(k)
    return out


def classify_oracle(m: int, edges: list[tuple[int, int]]) -> str:
    """Trichotomy from first principles.

    Raises ValueError on templates with a sink.  A vertex is an ergodic
    witness iff the gcd of its closed-walk lengths is 1; scanning up to
    m**2 + 1 sees every relevant combination of cycle lengths.
    """
    a = adjacency_matrix(m, edges)
    if not a.any(axis=1).all():
        raise ValueError("sink")
    if a.diagonal().any():
        return "loop"
    horizon = m * m + 1
    p = np.eye(m, dtype=bool)
    lengths: list[set[int]] = [set() for _ in range(m)]
    for k in range(1, horizon + 1):
        p = (p @ a)
        for v in range(m):
            if p[v, v]:
                lengths[v].add(k)
    for v in range(m):
        g = 0
        for k in lengths[v]:
            g = gcd(g, k)
        if g == 1:
            return "ergodic_no_loop"
    return "non_ergodic"


def reach_all_threshold_oracle(m: int, edges: list[tuple[int, int]],
                               v0: int, max_len: int) -> int | None:
    """Least l such that paths of every length in [l, max_len] from v0
    reach every vertex (None if even max_len fails)."""
    a = adjacency_matrix(m, edges)
    full = []
    p = np.eye(m, dtype=bool)
    for k in range(1, max_len + 1):
        p = (p @ a)
        full.append(bool(p[v0, :].all()))
    best = None
    for l in range(max_len, 0, -1):
        if full[l - 1]:
            best = l
        else:
            break
    return best


def power_walk_oracle(m: int, edges: list[tuple[int, int]],
                      walk: str) -> set[tuple[int, int]]:
    a = adjacency_matrix(m, edges)
    p = np.eye(m, dtype=bool)
    for c in walk:
        p = p @ (a if c == "f" else a.T)
    return {(i, j) for i in range(m) for j in range(m) if p[i, j]}


# ---- exhaustive homomorphism search ----

def brute_force_hom(succ: list[int | None], m: int,
                    edges: list[tuple[int, int]]) -> list[int] | None:
    """Backtracking over all total labelings, vertex by vertex."""
    n = len(succ)
    eset = set(edges)
    psi = [-1] * n

    def consistent(x: int) -> bool:
        s = succ[x]
        if s is not None and psi[s] != -1 and (psi[x], psi[s]) not in eset:
            return False
        for p in range(n):
            if succ[p] == x and psi[p] != -1 and (psi[p], psi[x]) not in eset:
                return False
        return True

    def rec(x: int) -> bool:
        if x == n:
            return True
        for v in range(m):
            psi[x] = v
            if consistent(x) and rec(x + 1):
                return True
        psi[x] = -1
        return False

    return list(psi) if rec(0) else None


# ---- unlabeled loopless digraph census ----

def canonical_digraph(m: int, edges: frozenset[tuple[int, int]]) -> frozenset:
    best = None
    for perm in itertools.permutations(range(m)):
        img = frozenset((perm[u], perm[v]) for u, v in edges)
        key = tuple(sorted(img))
        if best is None or key < best:
            best = key
    return frozenset(best)


def loopless_digraph_census(m: int) -> list[frozenset[tuple[int, int]]]:
    """All loopless digraphs on m unlabeled vertices (isolated vertices
    allowed), one representative edge set per isomorphism class."""
    pairs = [(u, v) for u in range(m) for v in range(m) if u != v]
    seen = set()
    out = []
    for mask in range(1 << len(pairs)):
        edges = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
        canon = canonical_digraph(m, edges)
        if canon not in seen:
            seen.add(canon)
            out.append(edges)
    return out


# ---- shift-model windows from the raw definition ----

def window_member_oracle(x: tuple[int, ...], y: tuple[int, ...],
                         r: int) -> bool | None:
    """Direct evaluation of the window-count congruence.

    Builds each window [x(2rn - r), x(2rn + r)) with x(j) = 0 for j < 0,
    finds the minimal n whose window meets y, and demands the window be
    fully determined by both finite sequences before testing the count.
    """
    yset = set(y)
    n = 0
    while True:
        lo_i, hi_i = 2 * r * n - r, 2 * r * n + r
        lo = 0 if lo_i < 0 else (x[lo_i] if lo_i < len(x) else None)
        hi = x[hi_i] if hi_i < len(x) else None
        if lo is None or hi is None:
            return None
        count = sum(1 for v in range(lo, hi) if v in yset)
        if count > 0:
            if y and y[-1] >= hi - 1:
                return count % (2 * r) == 0
            return None
        if y and y[-1] < hi:
            # y is exhausted before this window; later windows can
            # never be certified nonempty
            return None
        n += 1
