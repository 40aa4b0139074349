"""Forward-independent hitting sets and countdown labelings.

A set S hits a vertex x when some strictly positive forward iterate of
x lands in S.  S is ``spacing``-forward-independent when no member has
another member within ``spacing`` forward steps.  Such sets correspond
exactly to labelings into the countdown digraph: label each vertex with
its distance to the nearest member ahead; members get 0 and the label
resets to at least ``spacing`` across a member.

Truncation note: all constructions treat missing forward iterates as
"not there" (a sink never blocks independence, and hitting is only
promised on the interior at each construction's documented horizon).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import FunctionalGraph, class_diameters, proximity_classes
from .partition import Partition


@dataclass(frozen=True)
class HittingSet:
    """A member set with its independence spacing and the interior
    horizon at which the constructor promises hitting."""

    members: frozenset[int]
    spacing: int
    horizon: int

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def sorted_members(self) -> list[int]:
        return sorted(self.members)


def is_forward_independent(g: FunctionalGraph, members: set[int] | frozenset[int],
                           spacing: int) -> bool:
    """No member reaches another member in 1..spacing forward steps."""
    if spacing < 1:
        raise ValueError("spacing must be >= 1")
    for x in members:
        v: int | None = x
        for _ in range(spacing):
            v = g.succ[v]  # type: ignore[index]
            if v is None:
                break
            if v in members:
                return False
    return True


def _hits_forward(g: FunctionalGraph, members: set[int] | frozenset[int]) -> list[bool]:
    """hits[x]: some strictly positive forward iterate of x is a member."""
    n = g.n
    hits = [False] * n
    state = [0] * n  # 0 new, 1 on walk, 2 done
    pos: dict[int, int] = {}
    for start in range(n):
        if state[start] != 0:
            continue
        path: list[int] = []
        pos.clear()
        x = start
        while True:
            state[x] = 1
            pos[x] = len(path)
            path.append(x)
            nxt = g.succ[x]
            if nxt is None:
                val = False
                cut = len(path)
                break
            if state[nxt] == 1:
                cyc = path[pos[nxt]:]
                val = any(v in members for v in cyc)
                for v in cyc:
                    hits[v] = val
                    state[v] = 2
                cut = pos[nxt]
                if cut > 0:
                    val = val or (path[cut] in members)
                break
            if state[nxt] == 2:
                val = hits[nxt] or (nxt in members)
                cut = len(path)
                break
            x = nxt
        for i in range(cut - 1, -1, -1):
            v = path[i]
            hits[v] = val
            state[v] = 2
            val = val or (v in members)
    return hits


def is_hitting(g: FunctionalGraph, members: set[int] | frozenset[int],
               horizon: int) -> bool:
    """Every vertex with >= horizon forward iterates is hit by the set."""
    hits = _hits_forward(g, members)
    return all(hits[x] for x in g.interior(horizon))


def greedy_hitting(g: FunctionalGraph, spacing: int) -> HittingSet:
    """Deepest-last greedy construction on an acyclic graph.

    Vertices are processed sinks first; a vertex joins whenever no
    member sits within ``spacing`` forward steps (in particular every
    sink joins).  The result is spacing-forward-independent and hits the
    interior at horizon spacing + 1.  Consecutive members along any
    orbit end up exactly spacing + 1 steps apart: no member can sit
    strictly between a member and the next one ahead of it, so the
    forward distance recorded when a vertex joins is spacing + 1 on the
    nose.  Use :func:`periodic_hitting` when wider gaps are wanted.
    """
    if spacing < 1:
        raise ValueError("spacing must be >= 1")
    if not g.acyclic:
        raise ValueError("greedy construction requires an acyclic graph")
    iters = g.forward_iterates()
    order = sorted(range(g.n), key=lambda x: (iters[x], x))
    members: set[int] = set()
    # nearest[x]: distance from x to closest member at >= 0 steps, once
    # x has been processed
    nearest = [0] * g.n
    for x in order:
        s = g.succ[x]
        strict = None if s is None else nearest[s] + 1
        if strict is None or strict > spacing:
            members.add(x)
            nearest[x] = 0
        else:
            nearest[x] = strict
    return HittingSet(frozenset(members), spacing, spacing + 1)


def periodic_hitting(g: FunctionalGraph, period: int) -> HittingSet:
    """Members at every ``period``-th depth level of an acyclic graph.

    A vertex joins when its count of defined forward iterates is a
    multiple of ``period`` (so all sinks join).  Along any orbit the
    depth drops by one per step, hence consecutive members are exactly
    ``period`` apart: the set is (period - 1)-forward-independent and
    hits the interior at horizon ``period``.  Unlike the greedy
    construction this allows dialing in arbitrary gaps.
    """
    if period < 2:
        raise ValueError("period must be >= 2")
    if not g.acyclic:
        raise ValueError("periodic construction requires an acyclic graph")
    iters = g.forward_iterates()
    members = frozenset(x for x in range(g.n) if iters[x] % period == 0)
    return HittingSet(members, period - 1, period)


def labeling_from_hitting(g: FunctionalGraph,
                          members: set[int] | frozenset[int]) -> list[int | None]:
    """Least k >= 0 with f^k(x) a member, per vertex (None if never)."""
    n = g.n
    labels: list[int | None] = [None] * n
    state = [0] * n
    pos: dict[int, int] = {}
    for start in range(n):
        if state[start] != 0:
            continue
        path: list[int] = []
        pos.clear()
        x = start
        while True:
            state[x] = 1
            pos[x] = len(path)
            path.append(x)
            nxt = g.succ[x]
            if nxt is None:
                val: int | None = None
                cut = len(path)
                break
            if state[nxt] == 1:
                cyc = path[pos[nxt]:]
                c = len(cyc)
                mem_at = [i for i, v in enumerate(cyc) if v in members]
                for i, v in enumerate(cyc):
                    if not mem_at:
                        labels[v] = None
                    else:
                        labels[v] = min((j - i) % c for j in mem_at)
                    state[v] = 2
                cut = pos[nxt]
                val = labels[path[cut]] if cut < len(path) else None
                break
            if state[nxt] == 2:
                val = labels[nxt]
                cut = len(path)
                break
            x = nxt
        for i in range(cut - 1, -1, -1):
            v = path[i]
            if v in members:
                labels[v] = 0
            elif val is not None:
                labels[v] = val + 1
            else:
                labels[v] = None
            state[v] = 2
            val = labels[v]
    return labels


def countdown_violations(g: FunctionalGraph, labels: list[int | None],
                         spacing: int) -> list[tuple[int, int]]:
    """Edges breaking the countdown invariant (both endpoints labeled).

    Positive labels must decrement along the edge; a zero label must be
    followed by a label >= spacing.
    """
    bad = []
    for x, y in g.edges():
        a, b = labels[x], labels[y]
        if a is None or b is None:
            continue
        if a > 0:
            if b != a - 1:
                bad.append((x, y))
        elif b < spacing:
            bad.append((x, y))
    return bad


def hitting_from_labeling(g: FunctionalGraph, labels: list[int | None],
                          spacing: int) -> HittingSet:
    """Members are the zero-labeled vertices; the labeling must satisfy
    the countdown invariant."""
    if len(labels) != g.n:
        raise ValueError("labeling length does not match vertex count")
    bad = countdown_violations(g, labels, spacing)
    if bad:
        raise ValueError(f"countdown invariant violated on edges {bad[:5]}"
                         + ("..." if len(bad) > 5 else ""))
    members = frozenset(x for x in range(g.n) if labels[x] == 0)
    horizon = max((k for k in labels if k is not None), default=0)
    return HittingSet(members, spacing, horizon)


def hitting_from_cover(g: FunctionalGraph, cover: set[int] | frozenset[int],
                       spacing: int) -> HittingSet:
    """Members of the cover whose next ``spacing`` iterates leave it.

    Forward independence is unconditional.  When every vertex sees the
    cover within ``spacing`` steps, the result hits the interior at
    horizon D + spacing where D is the largest diameter of a proximity
    class of the cover at radius ``spacing`` (the last cover vertex of
    each class visit is kept).
    """
    if spacing < 1:
        raise ValueError("spacing must be >= 1")
    if not g.acyclic:
        raise ValueError("cover extraction requires an acyclic graph")
    cover = set(cover)
    members = set()
    for x in cover:
        v: int | None = x
        keep = True
        for _ in range(spacing):
            v = g.succ[v]  # type: ignore[index]
            if v is None:
                break
            if v in cover:
                keep = False
                break
        if keep:
            members.add(x)
    classes = proximity_classes(g, cover, spacing)
    diam = max(class_diameters(g, classes), default=0)
    return HittingSet(frozenset(members), spacing, diam + spacing)


def hitting_from_equivalence(g: FunctionalGraph, eq: Partition, t: int,
                             d: int) -> tuple[HittingSet, dict]:
    """Hitting set from an equivalence relation with small balls.

    A is the set of vertices never related to a later vertex of their
    own orbit; members are the A-vertices whose next t iterates leave A.
    The hypothesis that every ball of radius 2t(d+1) meets at most d+1
    classes is checked and reported (the construction is still returned
    when it fails).  Vertices outside the partition count as unrelated.
    """
    if t < 1 or d < 0:
        raise ValueError("t must be >= 1 and d >= 0")
    if not g.acyclic:
        raise ValueError("equivalence extraction requires an acyclic graph")
    diams = class_diameters(g, eq)
    max_diam = max(diams, default=0)
    in_a = [False] * g.n
    for x in range(g.n):
        ok = True
        if x in eq:
            cid = eq.class_id(x)
            v: int | None = x
            # related iterates are at most max_diam steps ahead
            for _ in range(max_diam):
                v = g.succ[v]  # type: ignore[index]
                if v is None:
                    break
                if v in eq and eq.class_id(v) == cid:
                    ok = False
                    break
        in_a[x] = ok
    members = set()
    for x in range(g.n):
        if not in_a[x]:
            continue
        v = g.succ[x]
        keep = True
        for _ in range(t):
            if v is None:
                break
            if in_a[v]:
                keep = False
                break
            v = g.succ[v]
        if keep:
            members.add(x)
    radius = 2 * t * (d + 1)
    max_ball = 0
    violations = 0
    for x in range(g.n):
        cids = {eq.class_id(y) for y in g.ball(x, radius) if y in eq}
        max_ball = max(max_ball, len(cids))
        if len(cids) > d + 1:
            violations += 1
    report = {
        "max_class_diameter": max_diam,
        "ball_radius": radius,
        "max_classes_per_ball": max_ball,
        "ball_violations": violations,
        "hypothesis_ok": violations == 0,
    }
    horizon = max_diam + 1 + t * (d + 1)
    return HittingSet(frozenset(members), t, horizon), report
