"""Structure graph computation, its brute-force oracle, and inverse
synthesis of a presentation from a structure graph.

The exact counting in build_structure works on any right-resolving,
countable-certified, rank <= 2 presentation, without assuming minimality:

* every aperiodic configuration has a unique shift representative anchored
  at the first position where it departs from its left periodic tail
  (right-resolvingness forces every presenting walk off its cycle exactly
  there);
* with the anchor fixed, distinct configurations correspond bijectively to
  walks in the determinized future graph seeded with the set of all cycle
  vertices that can emit the left tail, so transitional futures are counted
  by transfer-matrix iteration over that subset graph;
* the anchored counts are then smeared over simultaneous shifts of both
  endpoints, one hit per distinct endpoint pair, and every periodic point
  contributes one extra orbit to its own diagonal edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .core import (
    LabeledGraph,
    PeriodicOrbit,
    PeriodicPoint,
    EventuallyPeriodicPoint,
    StructureGraph,
    canonicalize_config,
    canonicalize_point,
)
from .errors import (
    BudgetExceeded,
    NotCountableCertified,
    RankTooHigh,
)
from .presentation import (
    RANK_HIGH,
    _cycle_certificate,
    _require_rr,
    analyze,
    minimize_right_resolving,
    trim_essential,
)

DEFAULT_PATH_BUDGET = 10 ** 6


@dataclass(frozen=True)
class TransitionalPath:
    """A simple path using no cycle edges, from a vertex of one cycle to a
    vertex of another (or the same) cycle."""

    vertices: tuple
    labels: tuple
    start_cycle: int
    start_index: int
    end_cycle: int
    end_index: int

    @property
    def length(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class TransferMatrix:
    """Counts of non-cycle edges between states; cycle edges are zeroed.
    Entries are exact ints, so iterated application never overflows."""

    entries: tuple  # sorted ((src, dst), count)

    @classmethod
    def from_edges(cls, edges):
        acc = {}
        for (a, _lbl, b) in edges:
            acc[(a, b)] = acc.get((a, b), 0) + 1
        return cls(tuple(sorted(acc.items())))

    def apply(self, vec):
        """Row vector times matrix: vec maps state -> count."""
        out = {}
        for ((a, b), k) in self.entries:
            if a in vec:
                out[b] = out.get(b, 0) + vec[a] * k
        return out


def _checked(g: LabeledGraph):
    """Trim and run the shared admission checks; returns (graph, cycles)."""
    _require_rr(g)
    g = trim_essential(g)
    report = analyze(g)
    if not report.is_countable_certified:
        raise NotCountableCertified("presentation cycles are not disjoint")
    if report.rank == RANK_HIGH:
        raise RankTooHigh("a path visits three or more cycles")
    return g, report.cycles


def _cycle_labels(g: LabeledGraph, cycles):
    """Label word along each cycle, aligned with its vertex tuple."""
    out = []
    for cyc in cycles:
        m = len(cyc)
        labs = []
        for k in range(m):
            found = [s for (b, s) in g.out_map[cyc[k]] if b == cyc[(k + 1) % m]]
            # certificate guarantees a unique cycle edge here
            labs.append(found[0])
        out.append(tuple(labs))
    return out


def _cycle_edge_set(cycles, labels):
    return {
        (cyc[k], cyc[(k + 1) % len(cyc)], labels[i][k])
        for i, cyc in enumerate(cycles)
        for k in range(len(cyc))
    }


def _structure_points(cycles, labels):
    """seeds: periodic point -> set of cycle vertices emitting its stream;
    membership: vertex -> (cycle index, position)."""
    seeds = {}
    membership = {}
    for i, cyc in enumerate(cycles):
        for a in range(len(cyc)):
            pt = canonicalize_point(labels[i], a)
            seeds.setdefault(pt, set()).add(cyc[a])
            membership[cyc[a]] = (i, a)
    return seeds, membership


def _smear(anchored):
    """Expand anchored per-orbit counts over simultaneous endpoint shifts."""
    final = {}
    for ((x, y), n) in anchored.items():
        for t in range(lcm(x.period, y.period)):
            key = (x.shift(t), y.shift(t))
            final[key] = final.get(key, 0) + n
    return final


def _subset_graph(g: LabeledGraph, starts):
    """Deterministic future graph over subset states reachable from the
    given seed sets.  States are named by sorted vertex tuples."""
    name = lambda fs: tuple(sorted(fs))
    states = {name(s): frozenset(s) for s in starts}
    frontier = list(states)
    edges = []
    while frontier:
        nxt = []
        for sid in frontier:
            state = states[sid]
            labels = sorted({s for v in state for (_b, s) in g.out_map.get(v, ())})
            for s in labels:
                succ = frozenset(b for v in state for b in g.step(v, s))
                tid = name(succ)
                if tid not in states:
                    states[tid] = succ
                    nxt.append(tid)
                edges.append((sid, tid, s))
        frontier = nxt
    return LabeledGraph.make(states.keys(), edges)


def _orbit_anchored_counts(g: LabeledGraph, seeds, orbit: PeriodicOrbit, anchored):
    """Accumulate anchored counts for departures from every phase of one
    orbit into the shared dict."""
    p = orbit.period
    starts = [frozenset(seeds[orbit.point(s)]) for s in range(p)]
    sub = _subset_graph(g, starts)
    certified, sub_cycles = _cycle_certificate(sub)
    if not certified:
        raise AssertionError("future graph of a certified input grew joint cycles")
    sub_labels = _cycle_labels(sub, sub_cycles)
    cyc_edges = _cycle_edge_set(sub_cycles, sub_labels)
    start_ids = [tuple(sorted(s)) for s in starts]
    start_cycle = set(start_ids)
    on_cycle = {}
    stream = {}
    for i, cyc in enumerate(sub_cycles):
        for c, sid in enumerate(cyc):
            on_cycle[sid] = i
            stream[sid] = canonicalize_point(sub_labels[i], c)
    trans_out = {v: [] for v in sub.vertices}
    for (a, b, s) in sub.edges:
        if (a, b, s) not in cyc_edges:
            trans_out[a].append((s, b))
    matrix = TransferMatrix.from_edges(
        (a, s, b) for (a, b, s) in sub.edges if (a, b, s) not in cyc_edges)
    for s in range(p):
        x_hat = orbit.point(s)
        vec = {}
        for (_lbl, b) in trans_out[start_ids[s]]:
            vec[b] = vec.get(b, 0) + 1
        ell = 1
        while vec:
            if ell > len(sub.vertices) + 1:
                raise AssertionError("transitional frontier failed to terminate")
            live = {}
            for sid, cnt in vec.items():
                if sid in on_cycle:
                    if sid in start_cycle:
                        raise AssertionError("transitional path re-entered its source cycle")
                    if trans_out[sid]:
                        raise AssertionError("cycle-to-cycle path despite rank check")
                    key = (x_hat, stream[sid].shift(-ell))
                    anchored[key] = anchored.get(key, 0) + cnt
                else:
                    live[sid] = cnt
            vec = matrix.apply(live)
            ell += 1


def build_structure(g: LabeledGraph) -> StructureGraph:
    """Structure graph of the shift presented by g.

    Requires a right-resolving presentation whose trimmed form has pairwise
    disjoint cycles and no path through three of them; raises
    NotRightResolving, NotCountableCertified or RankTooHigh otherwise.
    Counts are exact arbitrary-precision ints.
    """
    _require_rr(g)
    g = trim_essential(g)
    if not g.is_empty():
        g = minimize_right_resolving(g)
    g, cycles = _checked(g)
    if g.is_empty():
        return StructureGraph.make((), {})
    labels = _cycle_labels(g, cycles)
    seeds, _membership = _structure_points(cycles, labels)
    orbits = sorted({pt.orbit for pt in seeds}, key=PeriodicOrbit.sort_key)
    anchored = {}
    for orbit in orbits:
        _orbit_anchored_counts(g, seeds, orbit, anchored)
    counts = _smear(anchored)
    for o in orbits:
        for r in range(o.period):
            pt = o.point(r)
            counts[(pt, pt)] = counts.get((pt, pt), 0) + 1
    return StructureGraph.make(orbits, counts).validate()


def transitional_paths(g: LabeledGraph, cycles, labels, budget):
    """Every simple non-cycle-edge path between cycle vertices, by DFS."""
    cyc_edges = _cycle_edge_set(cycles, labels)
    _seeds, membership = _structure_points(cycles, labels)
    trans_out = {v: [] for v in g.vertices}
    for (a, b, s) in g.edges:
        if (a, b, s) not in cyc_edges:
            trans_out[a].append((s, b))
    for v in trans_out:
        trans_out[v].sort()
    paths = []
    for i, cyc in enumerate(cycles):
        for a, start in enumerate(cyc):
            stack = [(start, (start,), ())]
            while stack:
                v, verts, labs = stack.pop()
                if labs and v in membership:
                    j, bpos = membership[v]
                    paths.append(TransitionalPath(verts, labs, i, a, j, bpos))
                    if len(paths) > budget:
                        raise BudgetExceeded("more than %d transitional paths" % budget)
                    continue
                for (s, b) in sorted(trans_out[v]):
                    if b in verts:
                        raise AssertionError("non-simple transitional path")
                    stack.append((b, verts + (b,), labs + (s,)))
    return paths


def oracle_structure(g: LabeledGraph, path_budget: int = DEFAULT_PATH_BUDGET) -> StructureGraph:
    """Structure graph by definitional enumeration: every transitional path
    is expanded into its configuration, configurations are canonicalized and
    deduplicated per orbit, then counted.  Independent of build_structure's
    transfer-matrix machinery; exact whenever the path count fits the
    budget."""
    _require_rr(g)
    g, cycles = _checked(g)
    if g.is_empty():
        return StructureGraph.make((), {})
    labels = _cycle_labels(g, cycles)
    configs = set()
    for path in transitional_paths(g, cycles, labels, path_budget):
        left = canonicalize_point(labels[path.start_cycle], path.start_index)
        right = canonicalize_point(labels[path.end_cycle], path.end_index)
        cfg = canonicalize_config(left, path.labels, right.shift(-path.length))
        if not isinstance(cfg, EventuallyPeriodicPoint):
            raise AssertionError("periodic junction in a right-resolving presentation")
        configs.add(cfg)
    anchored = {}
    for cfg in configs:
        key = (cfg.left, cfg.right)
        anchored[key] = anchored.get(key, 0) + 1
    counts = _smear(anchored)
    orbits = sorted({canonicalize_point(labels[i], 0).orbit
                     for i in range(len(cycles))}, key=PeriodicOrbit.sort_key)
    for o in orbits:
        for r in range(o.period):
            pt = o.point(r)
            counts[(pt, pt)] = counts.get((pt, pt), 0) + 1
    return StructureGraph.make(orbits, counts).validate()


def _bits(n: int):
    out = []
    k = 0
    while n:
        if n & 1:
            out.append(k)
        n >>= 1
        k += 1
    return out


def _edge_classes(s: StructureGraph):
    """One representative per simultaneous-shift class of transition edges,
    in canonical order."""
    seen = set()
    classes = []
    for ((x, y), c) in s.transitions:
        if (x, y) in seen:
            continue
        for t in range(lcm(x.period, y.period)):
            seen.add((x.shift(t), y.shift(t)))
        classes.append((x, y, c))
    return classes


def synthesize(s: StructureGraph) -> LabeledGraph:
    """Right-resolving essential presentation over a fresh alphabet whose
    structure graph equals s with each orbit root renamed.

    Per orbit i of period m there is an outgoing cycle on q{i}_* and, when
    needed, an incoming cycle on p{i}_* wearing the same fresh labels.  Each
    transition-edge class with aperiodic count c' (the diagonal discounts
    the periodic point itself) becomes, per set bit 2^k of c', one gadget
    path q -> p with k doubled fresh-labeled edges, padded with single
    fresh-labeled edges to the least positive multiple of lcm(m_i, m_j)
    that is >= k + 2, so the gadget contributes exactly to its class."""
    s.validate()
    orbits = list(s.orbits)
    index = {o: i for i, o in enumerate(orbits)}
    edges = []
    for i, o in enumerate(orbits):
        m = o.period
        for r in range(m):
            edges.append(("q%d_%d" % (i, r), "q%d_%d" % (i, (r + 1) % m),
                          "a%d_%d" % (i, r)))
    needs_p = set()
    gadget_edges = []
    gid = 0
    for (x, y, c) in _edge_classes(s):
        cp = c - 1 if x == y else c
        if cp == 0:
            continue
        i, j = index[x.orbit], index[y.orbit]
        needs_p.add(j)
        base = lcm(x.period, y.period)
        for k in _bits(cp):
            length = base * ((k + 2 + base - 1) // base)
            nodes = (["q%d_%d" % (i, x.phase)]
                     + ["x%d_%d" % (gid, t) for t in range(1, length)]
                     + ["p%d_%d" % (j, y.phase)])
            for t in range(length):
                if 1 <= t <= k:
                    gadget_edges.append((nodes[t], nodes[t + 1], "e%d_%da" % (gid, t)))
                    gadget_edges.append((nodes[t], nodes[t + 1], "e%d_%db" % (gid, t)))
                else:
                    gadget_edges.append((nodes[t], nodes[t + 1], "e%d_%d" % (gid, t)))
            gid += 1
    for j in sorted(needs_p):
        m = orbits[j].period
        for r in range(m):
            edges.append(("p%d_%d" % (j, r), "p%d_%d" % (j, (r + 1) % m),
                          "a%d_%d" % (j, r)))
    return trim_essential(LabeledGraph.make([], edges + gadget_edges))
