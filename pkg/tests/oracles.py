"""Slow reference implementations used only to cross-check the library."""

from itertools import combinations, permutations


def edge_set(adj):
    return {frozenset((v, u)) for v, row in enumerate(adj) for u in row}


def brute_force_cliques(adj):
    """(count, clique number) by testing every vertex subset."""
    n = len(adj)
    edges = edge_set(adj)
    count = 0
    best = 0
    for k in range(n + 1):
        for subset in combinations(range(n), k):
            if all(frozenset(p) in edges for p in combinations(subset, 2)):
                count += 1
                best = k
    return count, best


def brute_force_isomorphic(a, b):
    """Try every permutation; only for tiny graphs."""
    if len(a) != len(b):
        return False
    ea, eb = edge_set(a), edge_set(b)
    if len(ea) != len(eb):
        return False
    for perm in permutations(range(len(a))):
        if {frozenset(perm[v] for v in e) for e in ea} == eb:
            return True
    return False


def complete_graph(n):
    return [[u for u in range(n) if u != v] for v in range(n)]


def k7_minus_triangle():
    gone = {4, 5, 6}
    return [[u for u in range(7) if u != v and not (u in gone and v in gone)] for v in range(7)]


def subset_oracle_count(adj):
    """Clique count by testing all 2**n subsets at once (vectorised).

    Subsets of the first k vertices are extended by vertex k only when
    the subset avoids every non-neighbour of k.
    """
    import numpy as np

    n = len(adj)
    ok = np.ones(1, dtype=bool)
    for k in range(n):
        non_nbr = sum(1 << u for u in range(k) if u not in set(adj[k]))
        subsets = np.arange(1 << k, dtype=np.int64)
        ok = np.concatenate([ok, ok & ((subsets & non_nbr) == 0)])
    return int(ok.sum())
