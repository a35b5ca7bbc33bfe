"""Brute-force reference implementations.

Everything here is deliberately naive and shares no pruned code paths with
the engine: set partitions are enumerated in full and filtered, copies are
found by raw permutation search, and isomorphism is decided by trying every
bijection.  These are the oracles the fast implementations are checked
against.
"""
from __future__ import annotations

from itertools import combinations, permutations

from .graphs import Graph


def set_partitions(m: int):
    """All partitions of {0..m-1} as restricted-growth block-id lists."""
    blocks = [0] * m

    def rec(i, k):
        if i == m:
            yield list(blocks)
            return
        for c in range(k + 1):
            blocks[i] = c
            yield from rec(i + 1, k + 1 if c == k else k)

    if m == 0:
        yield []
        return
    yield from rec(0, 0)


def partition_is_proper(g: Graph, blocks) -> bool:
    edges = g.edges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if blocks[i] == blocks[j] and set(edges[i]) & set(edges[j]):
                return False
    return True


def brute_embeddings(g: Graph, h: Graph):
    """Edge-index sets of all copies of h in g, by raw permutation search."""
    if h.n > g.n:
        return set()
    hedges = h.edges
    found = set()
    for combo in combinations(range(g.n), h.n):
        for perm in permutations(combo):
            ids = []
            ok = True
            for u, v in hedges:
                a, b = perm[u], perm[v]
                if not g.has_edge(a, b):
                    ok = False
                    break
                ids.append(g.edge_index[(a, b) if a < b else (b, a)])
            if ok:
                found.add(tuple(sorted(ids)))
    return found


def naive_rainbow_free_colorable(g: Graph, patterns) -> bool:
    """Reference decision: some all-matchings partition leaves no copy rainbow."""
    return naive_rainbow_free_colorable_multi(g, {"_": patterns})["_"]


def naive_rainbow_free_colorable_multi(g: Graph, families: dict) -> dict:
    """Decide several families over one shared partition sweep.

    families maps an arbitrary key to a list of pattern graphs; the result
    maps each key to the colorability verdict.
    """
    copy_sets = {
        key: [emb for h in pats for emb in sorted(brute_embeddings(g, h))]
        for key, pats in families.items()
    }
    verdict = {key: False for key in families}
    pending = set(families)
    for blocks in set_partitions(len(g.edges)):
        if not pending:
            break
        if not partition_is_proper(g, blocks):
            continue
        for key in list(pending):
            rainbow = False
            for emb in copy_sets[key]:
                cols = [blocks[i] for i in emb]
                if len(set(cols)) == len(cols):
                    rainbow = True
                    break
            if not rainbow:
                verdict[key] = True
                pending.discard(key)
    return verdict


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    gset = set(g.edges)
    for perm in permutations(range(g.n)):
        ok = True
        for u, v in h.edges:
            a, b = perm[u], perm[v]
            if (a, b) not in gset and (b, a) not in gset:
                ok = False
                break
        if ok:
            return True
    return False
