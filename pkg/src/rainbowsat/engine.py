"""Proper edge colorings, rainbow copies, and the exact colorability search.

A proper edge coloring is treated as a partition of the edge set into
matchings, enumerated exactly once per color renaming via restricted-growth
assignment.  The central decision procedure answers: does a host graph admit
a proper edge coloring in which no copy of any pattern in a family has all
edge colors pairwise distinct ("rainbow")?

The search assigns classes edge by edge.  Edges that participate in no
pattern copy can never make a copy rainbow, so the backtracking runs over the
copy-covered edges only and every solution extends greedily to the rest.  A
branch dies as soon as the last edge of some copy is assigned and the copy's
classes are pairwise distinct; that check is exact because edges are colored
in a fixed order.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from math import factorial

from .graphs import Graph, induced_subgraph, iter_bits


class Status(Enum):
    COLORABLE = "COLORABLE"
    UNCOLORABLE = "UNCOLORABLE"
    INDETERMINATE = "INDETERMINATE"


# -- colorings ---------------------------------------------------------------


@dataclass(frozen=True)
class EdgeColoring:
    """Class assignment per edge, indexed by the host's lexicographic edge order."""

    classes: tuple

    @property
    def num_classes(self) -> int:
        return len(set(self.classes))

    def is_restricted_growth(self) -> bool:
        seen = -1
        for c in self.classes:
            if c > seen + 1:
                return False
            seen = max(seen, c)
        return True

    def normalized(self) -> "EdgeColoring":
        """Relabel classes in first-occurrence order (restricted growth form)."""
        remap = {}
        out = []
        for c in self.classes:
            if c not in remap:
                remap[c] = len(remap)
            out.append(remap[c])
        return EdgeColoring(tuple(out))

    def to_json(self) -> dict:
        return {"classes": list(self.classes)}

    @classmethod
    def from_json(cls, obj) -> "EdgeColoring":
        return cls(tuple(int(c) for c in obj["classes"]))

    def as_lines(self, g: Graph) -> str:
        """One line per edge: 'u v class'."""
        return "\n".join(f"{u} {v} {c}" for (u, v), c in zip(g.edges, self.classes))

    @classmethod
    def from_lines(cls, g: Graph, text: str) -> "EdgeColoring":
        assign = {}
        for line in text.strip().splitlines():
            u, v, c = (int(tok) for tok in line.split())
            assign[(min(u, v), max(u, v))] = c
        try:
            return cls(tuple(assign[e] for e in g.edges))
        except KeyError as missing:
            raise ValueError(f"no class given for edge {missing.args[0]}") from None


def is_proper(g: Graph, coloring: EdgeColoring) -> bool:
    """True iff no two incident edges share a class."""
    if len(coloring.classes) != len(g.edges):
        raise ValueError(
            f"coloring has {len(coloring.classes)} classes for {len(g.edges)} edges"
        )
    seen = [set() for _ in range(g.n)]
    for (u, v), c in zip(g.edges, coloring.classes):
        if c in seen[u] or c in seen[v]:
            return False
        seen[u].add(c)
        seen[v].add(c)
    return True


# -- patterns and embeddings -------------------------------------------------


class Pattern:
    """A forbidden subgraph with its embedding machinery.

    Isolated vertices contribute nothing to edge sets; they are stripped into
    a separate count, and a copy of the pattern exists in a host iff the core
    embeds and the host has at least ``order`` vertices overall.
    """

    def __init__(self, graph: Graph, name: str | None = None):
        self.graph = graph
        self.name = name
        self.order = graph.n
        keep = [v for v in range(graph.n) if graph.degree(v) > 0]
        self.core, _ = induced_subgraph(graph, keep)
        self.isolated = graph.n - self.core.n
        self.core_connected = self.core.n <= 1 or self.core.is_connected()
        self._aut = None

    @property
    def automorphism_count(self) -> int:
        if self._aut is None:
            core_auts = sum(1 for _ in _matches(self.core, self.core, exact=True))
            self._aut = core_auts * factorial(self.isolated)
        return self._aut

    def __repr__(self):
        tag = self.name or f"n={self.graph.n},m={self.graph.edge_count}"
        return f"Pattern({tag})"


def as_pattern(obj) -> Pattern:
    return obj if isinstance(obj, Pattern) else Pattern(obj)


def _match_order(pat: Graph):
    """Vertex order growing each component from a high-degree root."""
    order = []
    placed = 0
    remaining = set(range(pat.n))
    while remaining:
        root = max(remaining, key=lambda v: (pat.degree(v), -v))
        order.append(root)
        placed |= 1 << root
        remaining.remove(root)
        while True:
            frontier = [v for v in remaining if pat.adj[v] & placed]
            if not frontier:
                break
            v = max(frontier, key=lambda u: ((pat.adj[u] & placed).bit_count(), pat.degree(u), -u))
            order.append(v)
            placed |= 1 << v
            remaining.remove(v)
    anchors = []
    for j, v in enumerate(order):
        prev = [i for i in range(j) if pat.has_edge(order[i], v)]
        anchors.append(prev)
    return order, anchors


def _matches(host: Graph, pat: Graph, exact: bool = False):
    """Injective maps sending pattern edges onto host edges.

    With ``exact`` the map must also send non-edges onto non-edges and match
    degrees, which on equal orders enumerates isomorphisms.
    """
    if pat.n > host.n:
        return
    if pat.n == 0:
        yield ()
        return
    order, anchors = _match_order(pat)
    nonanchors = [
        [i for i in range(j) if i not in anchors[j]] for j in range(len(order))
    ]
    full = (1 << host.n) - 1
    hdeg = host.degrees()
    pdeg = pat.degrees()
    assigned = [0] * pat.n

    def place(j: int, used: int):
        if j == pat.n:
            yield tuple(assigned)
            return
        v = order[j]
        cand = full & ~used
        for i in anchors[j]:
            cand &= host.adj[assigned[order[i]]]
        if exact:
            for i in nonanchors[j]:
                cand &= ~host.adj[assigned[order[i]]]
        for hv in iter_bits(cand):
            if exact:
                if hdeg[hv] != pdeg[v]:
                    continue
            elif hdeg[hv] < pdeg[v]:
                continue
            assigned[v] = hv
            yield from place(j + 1, used | (1 << hv))

    yield from place(0, 0)


@dataclass(frozen=True)
class EmbeddingList:
    """All copies of a pattern in a host, as sorted edge-index tuples."""

    host: Graph
    pattern: Pattern
    embeddings: tuple


def enumerate_embeddings(g: Graph, pattern) -> EmbeddingList:
    """Every copy of the pattern in g, each edge set listed exactly once."""
    pat = as_pattern(pattern)
    if pat.order > g.n:
        return EmbeddingList(g, pat, ())
    index = g.edge_index
    seen = set()
    for assigned in _matches(g, pat.core):
        ids = []
        for pu, pv in pat.core.edges:
            hu, hv = assigned[pu], assigned[pv]
            ids.append(index[(hu, hv) if hu < hv else (hv, hu)])
        seen.add(tuple(sorted(ids)))
    return EmbeddingList(g, pat, tuple(sorted(seen)))


def exists_embedding(g: Graph, pattern) -> bool:
    pat = as_pattern(pattern)
    if pat.order > g.n:
        return False
    for _ in _matches(g, pat.core):
        return True
    return False


def find_rainbow_embedding(g: Graph, coloring: EdgeColoring, pattern):
    """First copy of the pattern whose edge classes are pairwise distinct.

    Requires a proper coloring; returns the edge-index tuple or None.
    """
    if not is_proper(g, coloring):
        raise ValueError("coloring is not proper")
    for emb in enumerate_embeddings(g, pattern).embeddings:
        classes = [coloring.classes[i] for i in emb]
        if len(set(classes)) == len(classes):
            return emb
    return None


# -- the exact search --------------------------------------------------------


@dataclass
class SearchStats:
    nodes: int = 0
    max_depth: int = 0
    elapsed: float = 0.0
    searches: int = 1


@dataclass
class ColorabilityResult:
    status: Status
    witness: EdgeColoring | None
    stats: SearchStats = field(default_factory=SearchStats)


def _collect_embeddings(g: Graph, patterns) -> list:
    """Deduplicated copy edge sets of every pattern core in the host.

    Callers are responsible for the pattern-order gate (isolated vertices of
    a pattern may live outside the searched component, so the gate uses the
    original host order, not g.n).  Drops any copy that contains another copy
    as a subset: if the smaller one is non-rainbow, the larger one is too, so
    only minimal edge sets constrain the search.
    """
    sets = set()
    index = g.edge_index
    for pat in patterns:
        if pat.core.n > g.n:
            continue
        for assigned in _matches(g, pat.core):
            ids = []
            for pu, pv in pat.core.edges:
                hu, hv = assigned[pu], assigned[pv]
                ids.append(index[(hu, hv) if hu < hv else (hv, hu)])
            sets.add(tuple(sorted(ids)))
    if not sets:
        return []
    by_size = sorted(sets, key=lambda t: (len(t), t))
    kept = []
    kept_sets = []
    for emb in by_size:
        s = frozenset(emb)
        if any(other <= s for other in kept_sets if len(other) < len(s)):
            continue
        kept.append(emb)
        kept_sets.append(s)
    return kept


def _search_order(embeddings: list) -> list:
    """Edge order that completes copies early: chain copies by overlap."""
    remaining = list(embeddings)
    order = []
    placed = set()
    while remaining:
        if not order:
            pick = remaining[0]
        else:
            pick = max(remaining, key=lambda emb: (len(placed.intersection(emb)), [-e for e in emb]))
        remaining.remove(pick)
        for e in sorted(pick):
            if e not in placed:
                placed.add(e)
                order.append(e)
    return order


class _Budget:
    def __init__(self, node_limit, time_limit):
        self.node_limit = node_limit
        self.deadline = time.monotonic() + time_limit if time_limit else None

    def exceeded(self, nodes: int) -> bool:
        if self.node_limit is not None and nodes > self.node_limit:
            return True
        # the clock is only consulted periodically; node budgets are exact
        if self.deadline is not None and nodes % 4096 == 0:
            return time.monotonic() > self.deadline
        return False


def _search_component(g: Graph, embeddings, budget: _Budget):
    """Exhaustive restricted-growth search over the copy-covered edges.

    Returns (status, per-edge classes or None, stats).  Edge classes cover
    all host edges when a witness is found.
    """
    stats = SearchStats()
    start = time.monotonic()
    if any(len(e) == 0 for e in embeddings):
        # an edgeless pattern fits the host: every coloring is "rainbow"
        stats.elapsed = time.monotonic() - start
        return Status.UNCOLORABLE, None, stats

    order = _search_order(embeddings)
    T = len(order)
    pos = {e: i for i, e in enumerate(order)}
    by_last = [[] for _ in range(T)]
    for emb in embeddings:
        pt = tuple(sorted(pos[e] for e in emb))
        by_last[pt[-1]].append(pt)

    edges = g.edges
    endpoints = [edges[e] for e in order]
    used = [0] * g.n
    assigned = [0] * T
    kbefore = [0] * (T + 1)
    nxt = [0] * (T + 1)
    t = 0
    solution = None
    status = Status.UNCOLORABLE

    while t >= 0:
        if t == T:
            solution = list(assigned)
            status = Status.COLORABLE
            break
        u, v = endpoints[t]
        forbidden = used[u] | used[v]
        k = kbefore[t]
        c = nxt[t]
        while c < k and (forbidden >> c) & 1:
            c += 1
        if c > k:
            t -= 1
            if t >= 0:
                pu, pv = endpoints[t]
                bit = 1 << assigned[t]
                used[pu] ^= bit
                used[pv] ^= bit
            continue
        nxt[t] = c + 1
        assigned[t] = c
        bit = 1 << c
        used[u] |= bit
        used[v] |= bit
        stats.nodes += 1
        if t + 1 > stats.max_depth:
            stats.max_depth = t + 1
        if budget.exceeded(stats.nodes):
            status = Status.INDETERMINATE
            break
        ok = True
        for emb in by_last[t]:
            mask = 0
            rainbow = True
            for p in emb:
                b = 1 << assigned[p]
                if mask & b:
                    rainbow = False
                    break
                mask |= b
            if rainbow:
                ok = False
                break
        if ok:
            kbefore[t + 1] = k + 1 if c == k else k
            t += 1
            nxt[t] = 0
        else:
            used[u] ^= bit
            used[v] ^= bit

    stats.elapsed = time.monotonic() - start
    if status is not Status.COLORABLE:
        return status, None, stats

    # extend the partial witness greedily over copy-free edges
    classes = {order[i]: solution[i] for i in range(T)}
    vert_used = [0] * g.n
    for e, c in classes.items():
        u, v = edges[e]
        vert_used[u] |= 1 << c
        vert_used[v] |= 1 << c
    for e in range(len(edges)):
        if e in classes:
            continue
        u, v = edges[e]
        forbidden = vert_used[u] | vert_used[v]
        c = 0
        while (forbidden >> c) & 1:
            c += 1
        classes[e] = c
        vert_used[u] |= 1 << c
        vert_used[v] |= 1 << c
    return status, [classes[e] for e in range(len(edges))], stats


def component_decomposition(g: Graph) -> list:
    """Connected components with back-maps to original vertex labels."""
    return [induced_subgraph(g, comp) for comp in g.components()]


def rainbow_free_colorable(
    g: Graph,
    family,
    *,
    node_limit: int | None = None,
    time_limit: float | None = None,
    decompose: bool = True,
    host_order: int | None = None,
) -> ColorabilityResult:
    """Decide whether g has a proper edge coloring with no rainbow family copy.

    Exhaustive and exact: COLORABLE comes with a witness coloring,
    UNCOLORABLE means every proper coloring was refuted.  Exceeding the node
    or time budget yields INDETERMINATE, never a silent UNCOLORABLE.

    When every pattern is connected the host splits into components and the
    verdict is the conjunction of the per-component verdicts; a copy of a
    disconnected pattern may straddle components, so in that case the host is
    searched whole.  ``host_order`` overrides the vertex count used to decide
    whether a pattern fits (needed when g is one component of a larger host
    and patterns carry isolated vertices).
    """
    patterns = [as_pattern(p) for p in family]
    if not patterns:
        raise ValueError("empty pattern family")
    budget = _Budget(node_limit, time_limit)
    if host_order is None:
        host_order = g.n
    active = [p for p in patterns if p.order <= host_order]

    parts: list
    if decompose and all(p.core_connected for p in active) and not g.is_connected():
        parts = [induced_subgraph(g, comp) for comp in g.components()]
    else:
        parts = [(g, tuple(range(g.n)))]

    total = SearchStats(searches=0)
    merged = {}
    offset = 0
    for sub, vmap in parts:
        embeddings = _collect_embeddings(sub, active)
        status, classes, stats = _search_component(sub, embeddings, budget)
        total.nodes += stats.nodes
        total.max_depth = max(total.max_depth, stats.max_depth)
        total.elapsed += stats.elapsed
        total.searches += 1
        if status is not Status.COLORABLE:
            return ColorabilityResult(status, None, total)
        for (u, v), c in zip(sub.edges, classes):
            a, b = vmap[u], vmap[v]
            merged[(a, b) if a < b else (b, a)] = c + offset
        offset += max(classes, default=-1) + 1

    witness = EdgeColoring(tuple(merged[e] for e in g.edges)).normalized()
    return ColorabilityResult(Status.COLORABLE, witness, total)


def proper_partition_count(g: Graph) -> int:
    """Number of partitions of E(g) into matchings (proper colorings up to renaming)."""
    edges = g.edges
    m = len(edges)
    used = [0] * g.n
    count = 0

    def assign(i: int, k: int):
        nonlocal count
        if i == m:
            count += 1
            return
        u, v = edges[i]
        forbidden = used[u] | used[v]
        for c in range(k + 1):
            if c < k and (forbidden >> c) & 1:
                continue
            bit = 1 << c
            used[u] |= bit
            used[v] |= bit
            assign(i + 1, k + 1 if c == k else k)
            used[u] ^= bit
            used[v] ^= bit

    assign(0, 0)
    return count
