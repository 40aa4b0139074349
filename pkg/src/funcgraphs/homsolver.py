"""Digraph homomorphisms from functional graphs into small templates.

A labeling psi of a functional graph G into a template H is a
homomorphism when every edge (x, f(x)) of G maps to an edge of H.
This module has three layers:

* checkers (:func:`verify_hom`, :func:`hom_violations`),
* constructive solvers for special templates: a loop
  (:func:`solve_loop`) and an ergodic loopless template
  (:func:`solve_ergodic`, which needs a spaced hitting set and labels
  every vertex whose forward window is deep enough),
* the general decision procedure :func:`decide_hom` for finite total
  functional graphs, plus :func:`retract_to_strong_components` which
  pushes an arbitrary homomorphism into the strong components of H.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraphs import Digraph, GraphShapeError, path_of_length
from .graphs import FunctionalGraph
from .hitting import HittingSet, is_forward_independent
from .partition import Partition


def hom_violations(g: FunctionalGraph, psi: list[int | None],
                   h: Digraph) -> list[tuple[int, int]]:
    """Edges of G whose images are not edges of H (None labels skip)."""
    if len(psi) != g.n:
        raise ValueError("labeling length must match the graph")
    for v in psi:
        if v is not None and not 0 <= v < h.m:
            raise ValueError(f"label {v} outside the template")
    bad = []
    for x, y in g.edges():
        a, b = psi[x], psi[y]
        if a is None or b is None:
            continue
        if (a, b) not in h.edges:
            bad.append((x, y))
    return bad


def verify_hom(g: FunctionalGraph, psi: list[int], h: Digraph) -> bool:
    """True when the total labeling maps every edge of G into H."""
    if any(v is None for v in psi):
        raise ValueError("verify_hom expects a total labeling")
    return not hom_violations(g, psi, h)


def solve_loop(g: FunctionalGraph, h: Digraph) -> list[int]:
    """Constant labeling onto the least loop vertex of the template."""
    loops = h.loop_vertices()
    if not loops:
        raise GraphShapeError("template has no loop")
    return [min(loops)] * g.n


@dataclass(frozen=True)
class ErgodicSolverData:
    """Template-side precomputation shared by the ergodic solvers.

    ``cycle`` is the lexicographically least closed walk of minimal
    positive length at the witness vertex inside its strong component
    (listed with both endpoints, so it has cycle_len + 1 entries in
    sub-template labels).  ``to_orig`` maps those back to H.
    """

    h_sub: Digraph
    to_orig: tuple[int, ...]
    v0_sub: int
    reach_all: int
    cycle: tuple[int, ...]
    cycle_len: int

    def nonmember_label(self, k: int) -> int:
        """Label in H for a vertex k steps before its entry window."""
        return self.to_orig[self.cycle[(-k) % self.cycle_len]]

    def window_path(self, z_label_sub: int) -> list[int]:
        """Sub-template walk of length reach_all from v0 to z's label."""
        path = path_of_length(self.h_sub, self.v0_sub, z_label_sub,
                              self.reach_all)
        assert path is not None, "reach_all threshold violated"
        return path


def ergodic_solver_data(h: Digraph) -> ErgodicSolverData:
    """Validate the template and package what the solvers need."""
    if not h.is_sinkless():
        raise GraphShapeError("template has a sink")
    if h.has_loop():
        raise GraphShapeError("template has a loop; use solve_loop")
    witness = h.is_ergodic()
    if witness is None:
        raise GraphShapeError("template is not ergodic")
    comp = next(c for c in h.scc().classes() if witness.vertex in c)
    h_sub, to_orig = h.induced(comp)
    v0_sub = to_orig.index(witness.vertex)
    ell0 = h_sub.reach_all_threshold(v0_sub)
    lengths = h_sub.closed_walk_lengths(v0_sub, h_sub.m)
    gmin = min(l for l in lengths if l > 0)
    cycle = path_of_length(h_sub, v0_sub, v0_sub, gmin)
    assert cycle is not None
    return ErgodicSolverData(h_sub, tuple(to_orig), v0_sub, ell0,
                             tuple(cycle), gmin)


def solve_ergodic(g: FunctionalGraph, h: Digraph,
                  hitting: HittingSet) -> list[int | None]:
    """Label an acyclic graph into an ergodic loopless template.

    The hitting set must be forward-independent at the template's
    reach-all threshold L.  Vertices within L steps before a member
    form that member's entry window; windows of distinct members are
    disjoint.  A vertex outside all windows, k steps before entering
    one, takes the cycle label k steps before the witness vertex;
    window vertices walk a length-L path from the witness to the label
    of their member.  Vertices whose forward data is cut off by a sink
    stay None.
    """
    if not g.acyclic:
        raise ValueError("solve_ergodic requires an acyclic graph")
    data = ergodic_solver_data(h)
    ell0 = data.reach_all
    if not is_forward_independent(g, hitting.members, ell0):
        raise ValueError(
            f"hitting set is not {ell0}-forward-independent")
    n = g.n
    # window[x] = (member, steps to it) for vertices at 1..ell0 steps
    # before a member; disjointness is forced by independence
    window: list[tuple[int, int] | None] = [None] * n
    preds = g.predecessors()
    for z in hitting.members:
        frontier = [z]
        for j in range(1, ell0 + 1):
            nxt: list[int] = []
            for v in frontier:
                for y in preds[v]:
                    assert window[y] is None, "entry windows overlap"
                    window[y] = (z, j)
                    nxt.append(y)
            frontier = nxt
    iters = g.forward_iterates()
    order = sorted(range(n), key=lambda x: (iters[x], x))
    # steps from each non-window vertex to its first window vertex
    to_window: list[int | None] = [None] * n
    for x in order:
        if window[x] is not None:
            continue
        nxt = g.succ[x]
        if nxt is None:
            continue
        if window[nxt] is not None:
            to_window[x] = 1
        elif to_window[nxt] is not None:
            to_window[x] = to_window[nxt] + 1
    psi: list[int | None] = [None] * n
    window_paths: dict[int, list[int]] = {}
    for x in order:
        if window[x] is None:
            k = to_window[x]
            if k is not None:
                psi[x] = data.nonmember_label(k)
    for x in range(n):
        if window[x] is None:
            continue
        z, j = window[x]
        if psi[z] is None:
            continue
        if z not in window_paths:
            z_sub = data.to_orig.index(psi[z])
            window_paths[z] = data.window_path(z_sub)
        psi[x] = data.to_orig[window_paths[z][ell0 - j]]
    return psi


def _feasible_sets(g: FunctionalGraph, h: Digraph, comp: list[int],
                   on_cycle: set[int]) -> dict[int, set[int]] | None:
    """Bottom-up feasible template vertices for one weak component.

    feas[x] holds the template vertices v such that the tree hanging
    strictly above x admits a homomorphism sending x to v.  Returns
    None as soon as some vertex has no feasible label.
    """
    preds = g.predecessors()
    radj = h.radj()
    depth: dict[int, int] = {}
    for x in comp:
        if x in on_cycle:
            depth[x] = 0
    frontier = [x for x in comp if x in on_cycle]
    while frontier:
        nxt = []
        for x in frontier:
            for p in preds[x]:
                if p not in depth:
                    depth[p] = depth[x] + 1
                    nxt.append(p)
        frontier = nxt
    order = sorted(comp, key=lambda x: -depth[x])
    feas: dict[int, set[int]] = {}
    for x in order:
        tree_preds = [p for p in preds[x] if p not in on_cycle]
        allowed = set(range(h.m))
        for p in tree_preds:
            allowed &= {v for v in allowed
                        if feas[p] & set(radj[v])}
            if not allowed:
                return None
        feas[x] = allowed
    return feas


def decide_hom(g: FunctionalGraph, h: Digraph) -> list[int] | None:
    """Find a homomorphism from a total functional graph, or None.

    Each weak component of G is one directed cycle with in-trees.  A
    bottom-up pass collects the feasible template labels per vertex;
    the cycle is then labeled by the least workable choice at its least
    vertex followed by a greedy completable walk, and tree labels
    propagate outward choosing least in-neighbors.  The output is
    deterministic but not the globally least labeling.
    """
    if not g.is_total:
        raise ValueError("decide_hom expects a total graph")
    if not h.is_sinkless():
        raise GraphShapeError("template has a sink")
    psi: list[int | None] = [None] * g.n
    adj = h.adj()
    comps = _weak_components(g)
    for comp in comps:
        inset = set(comp)
        cyc = next(c for c in g.cycles() if set(c) & inset)
        on_cycle = set(cyc)
        feas = _feasible_sets(g, h, comp, on_cycle)
        if feas is None:
            return None
        # rotate the cycle to start at its least vertex
        start = cyc.index(min(cyc))
        cyc = cyc[start:] + cyc[:start]
        c = len(cyc)
        allowed = [sorted(feas[x]) for x in cyc]
        labels = None
        for a in allowed[0]:
            labels = _cycle_labels(adj, allowed, a)
            if labels is not None:
                break
        if labels is None:
            return None
        for x, v in zip(cyc, labels):
            psi[x] = v
        # outward tree labels: parents of labeled vertices, nearest first
        preds = g.predecessors()
        frontier = list(cyc)
        while frontier:
            nxt = []
            for x in frontier:
                for p in preds[x]:
                    if p in on_cycle or psi[p] is not None:
                        continue
                    target = psi[x]
                    assert target is not None
                    pick = min(v for v in feas[p] if (v, target) in h.edges)
                    psi[p] = pick
                    nxt.append(p)
            frontier = nxt
    assert all(v is not None for v in psi)
    return psi  # type: ignore[return-value]


def _cycle_labels(adj: list[list[int]], allowed: list[list[int]],
                  a: int) -> list[int] | None:
    """Greedy-lex labels around the cycle starting from label a.

    back[i] holds the labels at position i from which the remaining
    positions can still be completed and closed back onto a.
    """
    c = len(allowed)
    if a not in allowed[0]:
        return None
    back: list[set[int]] = [set() for _ in range(c)]
    closing = {a}
    cur = closing
    # back[c-1], ..., back[0] by walking the cycle backwards
    for i in range(c - 1, -1, -1):
        cur = {v for v in allowed[i] if any(w in cur for w in adj[v])}
        back[i] = cur
    if a not in back[0]:
        return None
    labels = [a]
    for i in range(1, c):
        prev = labels[-1]
        options = [v for v in adj[prev] if v in back[i]]
        if not options:
            return None
        labels.append(min(options))
    # close the cycle
    if a not in adj[labels[-1]]:
        return None
    return labels


def _weak_components(g: FunctionalGraph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    adjacency = g.adjacency()
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        i = 0
        while i < len(comp):
            for w in adjacency[comp[i]]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
            i += 1
        out.append(sorted(comp))
    return out


def retract_to_strong_components(
        g: FunctionalGraph, psi: list[int],
        h: Digraph) -> tuple[list[int], Partition]:
    """Rewrite a homomorphism so images stay in strong components of H.

    For each weak component of G the image of its cycle already sits in
    one strong component A; every other vertex x is relabeled by
    walking backwards inside A from the image of the first vertex after
    which the orbit's images never leave A.  Returns the new labeling
    together with the partition of G's vertices by that target strong
    component.
    """
    if not g.is_total:
        raise ValueError("retraction expects a total graph")
    if not verify_hom(g, psi, h):
        raise ValueError("psi is not a homomorphism")
    scc = h.scc()
    radj = h.radj()
    n = g.n
    # tail_k[x]: least k such that all images from f^k(x) on lie in the
    # target component; land[x] = f^{tail_k}(x)
    tail_k = [0] * n
    land = list(range(n))
    target = [0] * n  # scc class id per G-vertex
    comps = _weak_components(g)
    preds = g.predecessors()
    for comp in comps:
        inset = set(comp)
        cyc = next(c for c in g.cycles() if set(c) & inset)
        cls = {scc.class_id(psi[x]) for x in cyc}
        assert len(cls) == 1, "cycle image spans several components"
        a_id = cls.pop()
        for x in comp:
            target[x] = a_id
        in_a = {x: scc.class_id(psi[x]) == a_id for x in comp}
        for x in cyc:
            assert in_a[x]
            tail_k[x] = 0
            land[x] = x
        cycset = set(cyc)
        frontier = list(cyc)
        while frontier:
            nxt = []
            for y in frontier:
                for x in preds[y]:
                    if x in cycset:
                        continue
                    if in_a[x] and tail_k[y] == 0:
                        tail_k[x] = 0
                        land[x] = x
                    else:
                        tail_k[x] = tail_k[y] + 1
                        land[x] = land[y]
                    nxt.append(x)
            frontier = nxt
    # backward chains inside each strong component: chain[v][k] is the
    # least in-neighbor walk of length k ending at v
    chain: dict[int, list[int]] = {}

    def back(v: int, k: int) -> int:
        steps = chain.setdefault(v, [v])
        while len(steps) <= k:
            tail = steps[-1]
            cid = scc.class_id(v)
            inside = [u for u in radj[tail] if scc.class_id(u) == cid]
            if not inside:
                raise GraphShapeError(
                    "strong component has no internal in-edge")
            steps.append(min(inside))
        return steps[k]

    psi2 = [back(psi[land[x]], tail_k[x]) for x in range(n)]
    bad = hom_violations(g, psi2, h)  # type: ignore[arg-type]
    assert not bad, bad
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(target[x], []).append(x)
    return psi2, Partition.from_classes(groups.values())
