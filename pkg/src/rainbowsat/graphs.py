"""Bitset-backed simple graphs on at most 64 vertices.

Vertices are labeled 0..n-1 and each vertex stores its neighborhood as one
integer bitmask, so adjacency tests, intersections and degree counts are
single machine-word operations.  The edge list of a graph is always ordered
lexicographically by (min endpoint, max endpoint); every edge index used in
the rest of the package (colorings, embeddings, search traces) refers to
that order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

MAX_VERTICES = 64


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable undirected simple graph.

    Construct with a vertex count and an iterable of (u, v) pairs.  Loops and
    out-of-range endpoints are rejected; duplicate pairs collapse.
    """

    __slots__ = ("n", "adj", "_edges", "_edge_index")

    def __init__(self, n: int, edges=()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._edges = None
        self._edge_index = None

    # -- basic accessors -------------------------------------------------

    @property
    def edges(self) -> tuple:
        """Edge list in lexicographic (u, v) order with u < v."""
        if self._edges is None:
            out = []
            for u in range(self.n):
                mask = self.adj[u] >> (u + 1)
                v = u + 1
                while mask:
                    if mask & 1:
                        out.append((u, v))
                    mask >>= 1
                    v += 1
            self._edges = tuple(out)
        return self._edges

    @property
    def edge_index(self) -> dict:
        """Map (u, v) with u < v to its position in ``edges``."""
        if self._edge_index is None:
            self._edge_index = {e: i for i, e in enumerate(self.edges)}
        return self._edge_index

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple:
        return tuple(a.bit_count() for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def non_edges(self) -> list:
        """Unordered pairs of distinct nonadjacent vertices, lexicographic."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not (self.adj[u] >> v) & 1
        ]

    # -- derived graphs --------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"bad edge ({u},{v})")
        g = Graph.__new__(Graph)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        g.n = self.n
        g.adj = tuple(adj)
        g._edges = None
        g._edge_index = None
        return g

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"({u},{v}) is not an edge")
        g = Graph.__new__(Graph)
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        g.n = self.n
        g.adj = tuple(adj)
        g._edges = None
        g._edge_index = None
        return g

    def relabel(self, perm) -> "Graph":
        """Return the graph with vertex v renamed to perm[v]."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    # -- structure -------------------------------------------------------

    def components(self) -> list:
        """Connected components as sorted vertex tuples, ordered by minimum."""
        seen = 0
        out = []
        for start in range(self.n):
            if (seen >> start) & 1:
                continue
            comp = 1 << start
            frontier = 1 << start
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= nxt
            seen |= comp
            out.append(tuple(iter_bits(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def is_bipartite(self) -> bool:
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] >= 0:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for w in iter_bits(self.adj[v]):
                    if color[w] < 0:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return False
        return True

    def is_forest(self) -> bool:
        return self.edge_count == self.n - len(self.components())

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def induced_subgraph(g: Graph, vertices) -> tuple:
    """Induced subgraph on ``vertices`` plus the back-map to original labels.

    Returns (subgraph, vmap) where subgraph vertex i corresponds to original
    vertex vmap[i]; vmap is sorted ascending.
    """
    vmap = tuple(sorted(set(vertices)))
    pos = {v: i for i, v in enumerate(vmap)}
    edges = [
        (pos[u], pos[v]) for u, v in combinations(vmap, 2) if g.has_edge(u, v)
    ]
    return Graph(len(vmap), edges), vmap


def delete_vertices(g: Graph, vertices) -> Graph:
    drop = set(vertices)
    keep = [v for v in range(g.n) if v not in drop]
    sub, _ = induced_subgraph(g, keep)
    return sub


# -- standard generators ---------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(r: int) -> Graph:
    if not 1 <= r <= MAX_VERTICES:
        raise ValueError(f"complete graph order {r} outside 1..{MAX_VERTICES}")
    return Graph(r, combinations(range(r), 2))


def path(k: int) -> Graph:
    if k < 1:
        raise ValueError("path needs at least one vertex")
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    if leaves < 0:
        raise ValueError("negative leaf count")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(n: int) -> Graph:
    """Wheel on n vertices: hub n-1 joined to the cycle 0..n-2."""
    if n < 4:
        raise ValueError("wheel needs at least four vertices")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    return Graph(n, edges)


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty_graph(a), empty_graph(b))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies of g and h plus all edges in between.

    Vertices of g keep their labels; vertices of h are shifted by g.n.
    """
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise ValueError(f"join would have {n} > {MAX_VERTICES} vertices")
    edges = list(g.edges)
    edges += [(u + g.n, v + g.n) for u, v in h.edges]
    edges += [(u, v + g.n) for u in range(g.n) for v in range(h.n)]
    return Graph(n, edges)


def disjoint_union(gs) -> Graph:
    gs = list(gs)
    n = sum(g.n for g in gs)
    if n > MAX_VERTICES:
        raise ValueError(f"union would have {n} > {MAX_VERTICES} vertices")
    edges = []
    offset = 0
    for g in gs:
        edges += [(u + offset, v + offset) for u, v in g.edges]
        offset += g.n
    return Graph(n, edges)


# -- canonical forms and isomorphism ----------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical encoding plus the relabeling that realizes it.

    Two graphs are isomorphic iff their encodings are equal.  Applying
    ``relabeling`` (original vertex -> canonical label) to the source graph
    yields the canonical representative of its isomorphism class.
    """

    encoding: bytes
    relabeling: tuple


def _refine(adj, cells):
    """Equitable refinement of an ordered partition.

    Repeatedly splits cells by neighbor counts into any current cell; split
    parts are ordered by count ascending.  The rule depends only on counts
    and cell order, so it commutes with vertex relabeling.
    """
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        for s in range(len(cells)):
            smask = 0
            for v in cells[s]:
                smask |= 1 << v
            for d in range(len(cells)):
                cell = cells[d]
                if len(cell) == 1:
                    continue
                groups = {}
                for v in cell:
                    groups.setdefault((adj[v] & smask).bit_count(), []).append(v)
                if len(groups) > 1:
                    cells[d : d + 1] = [groups[k] for k in sorted(groups)]
                    changed = True
                    break
            if changed:
                break
    return cells


def _leaf_code(adj, order):
    code = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            code = (code << 1) | ((row >> order[i]) & 1)
    return code


def _canonical_search(g: Graph):
    """Minimum adjacency code over all refinement-compatible orderings."""
    n, adj = g.n, g.adj
    if n <= 1:
        return 0, tuple(range(n))
    full = (1 << n) - 1
    if all(a == full ^ (1 << v) for v, a in enumerate(adj)) or not any(adj):
        # complete and empty graphs: every ordering gives the same code
        return _leaf_code(adj, range(n)), tuple(range(n))

    best_code = None
    best_order = None

    def descend(cells):
        nonlocal best_code, best_order
        target = None
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                target = idx
                break
        if target is None:
            order = [c[0] for c in cells]
            code = _leaf_code(adj, order)
            if best_code is None or code < best_code:
                best_code = code
                best_order = tuple(order)
            return
        cell = cells[target]
        # twin vertices (equal open or closed neighborhoods) are swapped by a
        # transposition automorphism, so one representative per twin class
        # suffices
        seen_open = set()
        seen_closed = set()
        for v in cell:
            open_key = adj[v]
            closed_key = adj[v] | (1 << v)
            if open_key in seen_open or closed_key in seen_closed:
                continue
            seen_open.add(open_key)
            seen_closed.add(closed_key)
            rest = [w for w in cell if w != v]
            descend(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1 :]))

    descend(_refine(adj, [list(range(n))]))
    return best_code, best_order


@lru_cache(maxsize=1 << 17)
def canonical_form(g: Graph) -> CanonicalForm:
    """Canonical form; encodings are equal iff the graphs are isomorphic."""
    code, order = _canonical_search(g)
    relabel = [0] * g.n
    for position, v in enumerate(order):
        relabel[v] = position
    nbits = comb(g.n, 2)
    encoding = bytes([g.n]) + code.to_bytes((nbits + 7) // 8, "big")
    return CanonicalForm(encoding, tuple(relabel))


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    return g.relabel(canonical_form(g).relabeling)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    return canonical_form(g).encoding == canonical_form(h).encoding


# -- independent sets --------------------------------------------------------


def max_independent_set(g: Graph) -> tuple:
    """A maximum independent set, found by exact branch and bound."""
    n = g.n
    if n == 0:
        return ()
    adj = g.adj
    best = [0, -1]  # size, mask

    def grow(cand: int, cur_mask: int, cur_size: int):
        if cur_size + cand.bit_count() <= best[0]:
            return
        if cand == 0:
            best[0] = cur_size
            best[1] = cur_mask
            return
        # branch on the highest-degree candidate, lowest id on ties
        v = max(iter_bits(cand), key=lambda u: ((adj[u] & cand).bit_count(), -u))
        grow(cand & ~(adj[v] | (1 << v)), cur_mask | (1 << v), cur_size + 1)
        grow(cand & ~(1 << v), cur_mask, cur_size)

    grow((1 << n) - 1, 0, 0)
    return tuple(iter_bits(best[1]))


def independence_number(g: Graph) -> int:
    return len(max_independent_set(g))


def independent_sets_of_size(g: Graph, k: int):
    """All independent vertex sets of exactly size k (small graphs only)."""
    for combo in combinations(range(g.n), k):
        mask = 0
        ok = True
        for v in combo:
            if g.adj[v] & mask:
                ok = False
                break
            mask |= 1 << v
        if ok:
            yield combo


# -- induced even cycles -----------------------------------------------------


def is_even_cycle_free(g: Graph) -> bool:
    """True iff g has no induced cycle of even length.

    Exhaustive check over vertex subsets; intended for pattern-sized graphs.
    """
    for size in range(4, g.n + 1, 2):
        for combo in combinations(range(g.n), size):
            sub, _ = induced_subgraph(g, combo)
            if sub.edge_count == size and all(d == 2 for d in sub.degrees()):
                if sub.is_connected():
                    return False
    return True


# -- graph6 and JSON interchange --------------------------------------------

_G6_HEADER = ">>graph6<<"


def graph6_encode(g: Graph) -> str:
    """Standard graph6 encoding (ASCII), supporting n up to 64."""
    n = g.n
    if n <= 62:
        head = chr(63 + n)
    else:
        head = "~" + chr(63 + ((n >> 12) & 63)) + chr(63 + ((n >> 6) & 63)) + chr(63 + (n & 63))
    chunks = [head]
    acc = 0
    nb = 0
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | ((g.adj[u] >> v) & 1)
            nb += 1
            if nb == 6:
                chunks.append(chr(63 + acc))
                acc = 0
                nb = 0
    if nb:
        chunks.append(chr(63 + (acc << (6 - nb))))
    return "".join(chunks)


def graph6_decode(text: str) -> Graph:
    """Decode a graph6 string (optionally prefixed with '>>graph6<<')."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :].strip()
    if not s:
        raise ValueError("empty graph6 string")
    if s[0] == "~":
        if len(s) < 4:
            raise ValueError("truncated graph6 size field")
        vals = [ord(c) - 63 for c in s[1:4]]
        if any(not 0 <= x <= 63 for x in vals):
            raise ValueError("bad graph6 size field")
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        if not 0 <= n <= 62:
            raise ValueError(f"bad graph6 size character {s[0]!r}")
        body = s[1:]
    if n > MAX_VERTICES:
        raise ValueError(f"graph6 order {n} exceeds supported maximum {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise ValueError(f"graph6 body has {len(body)} characters, expected {need}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ValueError(f"bad graph6 character {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 string")
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj: dict) -> Graph:
    return Graph(int(obj["n"]), [tuple(e) for e in obj["edges"]])


# -- names -------------------------------------------------------------------


def named_graph(name: str) -> Graph:
    """Resolve K#, P#, C#, E#, W# and K#_# names to generator output."""
    if "_" in name and name.startswith("K"):
        a, _, b = name[1:].partition("_")
        if a.isdigit() and b.isdigit():
            if a == "1":
                return star(int(b))
            return complete_bipartite(int(a), int(b))
    kind, num = name[:1], name[1:]
    if num.isdigit():
        k = int(num)
        if kind == "K":
            return complete_graph(k)
        if kind == "P":
            return path(k)
        if kind == "C":
            return cycle(k)
        if kind == "E":
            return empty_graph(k)
        if kind == "W":
            return wheel(k)
    raise ValueError(f"unknown graph name {name!r}")
