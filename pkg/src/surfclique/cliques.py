"""Exact clique counting on small graphs.

The empty set and every single vertex count as cliques, so ``K_n`` has
``2**n`` cliques.  Graphs are handled as neighbour bitmasks: vertex ``v``
is adjacent to ``u`` iff bit ``u`` of ``masks[v]`` is set.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .embed import Embedding

__all__ = [
    "MAX_VERTICES",
    "CliqueReport",
    "adjacency_masks",
    "count_cliques",
    "excess",
    "clique_number",
    "clique_report",
    "contains_complete",
]

MAX_VERTICES = 64

GraphLike = Union[Embedding, Sequence[Iterable[int]], Mapping[int, Iterable[int]]]


@dataclass(frozen=True)
class CliqueReport:
    total: int
    excess: int
    clique_number: int


def adjacency_masks(g: GraphLike) -> tuple[int, ...]:
    """Neighbour bitmasks for an embedding, a list of neighbour lists, or a
    ``{vertex: neighbours}`` mapping over ``0..n-1``."""
    if isinstance(g, Embedding):
        masks = g.adjacency_masks
    else:
        if isinstance(g, Mapping):
            n = len(g)
            if set(g) != set(range(n)):
                raise ValueError("mapping keys must be 0..n-1")
            rows = [g[v] for v in range(n)]
        else:
            rows = list(g)
        masks = []
        for v, row in enumerate(rows):
            m = 0
            for u in row:
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                m |= 1 << u
            masks.append(m)
        masks = tuple(masks)
        for v, m in enumerate(masks):
            if m >> len(masks):
                raise ValueError(f"vertex {v} has a neighbour outside 0..{len(masks) - 1}")
            u_bits = m
            while u_bits:
                low = u_bits & -u_bits
                u = low.bit_length() - 1
                if not masks[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric between {v} and {u}")
                u_bits ^= low
    if len(masks) > MAX_VERTICES:
        raise ValueError(f"clique counting is capped at {MAX_VERTICES} vertices, got {len(masks)}")
    return masks


def _enumerate(masks: Sequence[int]) -> tuple[int, int]:
    """Return (number of cliques, largest clique size).

    Each clique is reached once, by adding its vertices in increasing order;
    candidates at every step are the common later neighbours so far.
    """
    n = len(masks)
    later = [m & ~((1 << (v + 1)) - 1) for v, m in enumerate(masks)]
    total = 0
    best = 0
    # explicit stack of (candidate mask, clique size)
    stack = [((1 << n) - 1, 0)]
    while stack:
        cand, size = stack.pop()
        total += 1
        if size > best:
            best = size
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            stack.append((cand & later[v], size + 1))
    return total, best


def count_cliques(g: GraphLike) -> int:
    """Number of cliques of ``g``, the empty clique included."""
    return _enumerate(adjacency_masks(g))[0]


def excess(g: GraphLike) -> int:
    masks = adjacency_masks(g)
    return _enumerate(masks)[0] - 8 * len(masks)


def clique_number(g: GraphLike) -> int:
    return _enumerate(adjacency_masks(g))[1]


def clique_report(g: GraphLike) -> CliqueReport:
    masks = adjacency_masks(g)
    total, omega = _enumerate(masks)
    return CliqueReport(total=total, excess=total - 8 * len(masks), clique_number=omega)


def contains_complete(g: GraphLike, k: int) -> bool:
    """Whether ``g`` has a ``K_k`` subgraph."""
    return clique_number(g) >= k
