"""Edge contraction, triangle splitting and irreducibility.

An edge ``vw`` of a triangulation is reducible when it lies in exactly two
triangles, i.e. ``v`` and ``w`` have exactly two common neighbours ``x``
and ``y``.  Contracting it merges ``w`` into ``v`` and keeps the result a
triangulation of the same surface.  Splitting a face ``xvy`` adds a new
vertex joined to ``x``, ``v`` and ``y``; it is the inverse of contracting
an edge whose apexes are adjacent, and it adds exactly 8 cliques.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Literal, Sequence

from .cliques import GraphLike, adjacency_masks
from .embed import Embedding, EmbeddingError, FaceHandle, faces

__all__ = [
    "SurgeryError",
    "ReducibleEdge",
    "reducible_edges",
    "is_irreducible",
    "contract",
    "split_face",
    "reduce_to_irreducible",
    "generate_extremal",
    "isomorphic",
    "graph_isomorphisms",
    "embeddings_isomorphic",
    "MAX_ISO_VERTICES",
]

MAX_ISO_VERTICES = 12


class SurgeryError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ReducibleEdge:
    """Edge ``vw`` together with its two apexes ``x < y``.

    Contraction keeps ``v`` and removes ``w``; ``flipped()`` swaps the roles.
    """

    v: int
    w: int
    x: int
    y: int

    def flipped(self) -> "ReducibleEdge":
        return ReducibleEdge(self.w, self.v, self.x, self.y)


def reducible_edges(e: Embedding) -> list[ReducibleEdge]:
    """Reducible edges with ``v < w``, in lexicographic order."""
    nb = e.neighbor_sets
    out = []
    for v, w in e.edges:
        common = nb[v] & nb[w]
        if len(common) == 2:
            x, y = sorted(common)
            out.append(ReducibleEdge(v, w, x, y))
    return out


def is_irreducible(e: Embedding) -> bool:
    return not reducible_edges(e)


def _check_reducible(e: Embedding, r: ReducibleEdge) -> None:
    nb = e.neighbor_sets
    n = e.vertex_count
    if not (0 <= r.v < n and 0 <= r.w < n) or r.w not in nb[r.v]:
        raise SurgeryError(f"{r.v}{r.w} is not an edge")
    if nb[r.v] & nb[r.w] != {r.x, r.y} or r.x == r.y:
        raise SurgeryError(f"edge {r.v}{r.w} is not reducible with apexes {r.x}, {r.y}")


def _segment(rot: Sequence[int], start: int, stop: int, avoid: int) -> list[int]:
    """Entries of the cyclic ``rot`` strictly between ``start`` and ``stop``,
    walking from ``start`` away from ``avoid``."""
    d = len(rot)
    i = rot.index(start)
    step = -1 if rot[(i + 1) % d] == avoid else 1
    out = []
    j = (i + step) % d
    while rot[j] != stop:
        out.append(rot[j])
        j = (j + step) % d
    return out


def contract(e: Embedding, r: ReducibleEdge) -> Embedding:
    """Contract the reducible edge ``r.v r.w`` into ``r.v``.

    Vertices above ``r.w`` are renumbered down by one.
    """
    _check_reducible(e, r)
    v, w, x, y = r.v, r.w, r.x, r.y
    rots = [list(rot) for rot in e.rotations]
    inner = _segment(rots[w], x, y, avoid=v)

    rv = rots[v]
    k = rv.index(w)
    before = rv[k - 1]
    # rotation of v read forwards as ... before, w, after ...
    seg = inner if before == x else inner[::-1]
    candidates = [seg, seg[::-1]] if seg else [seg]
    for u in inner:
        rots[u] = [v if t == w else t for t in rots[u]]
    rots[x].remove(w)
    rots[y].remove(w)

    last_error = None
    for cand in candidates:
        new = list(rv)
        new[k:k + 1] = cand
        trial = list(rots)
        trial[v] = new
        try:
            return Embedding(_drop_vertex(trial, w))
        except EmbeddingError as exc:  # pragma: no cover - only on a splice bug
            last_error = exc
    raise SurgeryError(f"contraction produced an invalid link: {last_error}")


def _drop_vertex(rots: list[list[int]], w: int) -> tuple[tuple[int, ...], ...]:
    return tuple(
        tuple(u - (u > w) for u in rot) for idx, rot in enumerate(rots) if idx != w
    )


def split_face(e: Embedding, f: FaceHandle) -> Embedding:
    """Insert a new vertex (numbered ``n``) inside face ``f``."""
    if f not in set(faces(e)):
        raise SurgeryError(f"stale face handle {f}")
    p = e.vertex_count
    rots = [list(r) for r in e.rotations]
    for v, i in f.corners:
        rots[v].insert(i + 1, p)
    v0, i0 = f.corners[0]
    r0 = e.rotations[v0]
    x, y = r0[i0], r0[(i0 + 1) % len(r0)]
    rots.append([x, v0, y])
    return Embedding(tuple(tuple(r) for r in rots))


def reduce_to_irreducible(
    e: Embedding, rng: random.Random | None = None
) -> tuple[Embedding, int]:
    """Contract reducible edges until none is left.

    Without ``rng`` the lexicographically first reducible edge is contracted
    into its smaller endpoint.  With ``rng`` both the edge and the surviving
    endpoint are drawn at random.

    Returns:
        The irreducible triangulation and the number of contractions made.
    """
    steps = 0
    while True:
        red = reducible_edges(e)
        if not red:
            return e, steps
        if rng is None:
            r = red[0]
        else:
            r = rng.choice(red)
            if rng.random() < 0.5:
                r = r.flipped()
        e = contract(e, r)
        steps += 1


def generate_extremal(
    seed: Embedding,
    n: int,
    face_policy: Literal["lex", "random"] = "lex",
    rng: random.Random | int | None = None,
) -> Embedding:
    """Split faces of ``seed`` until it has ``n`` vertices.

    Every split adds one vertex and 8 cliques, so the excess of the seed
    is preserved.  ``face_policy="lex"`` always splits the first face in
    :func:`faces` order; ``"random"`` draws from ``rng`` (a ``Random`` or
    an integer seed).
    """
    if n < seed.vertex_count:
        raise SurgeryError(f"target order {n} is below the seed order {seed.vertex_count}")
    if face_policy not in ("lex", "random"):
        raise ValueError(f"unknown face policy {face_policy!r}")
    if face_policy == "random" and not isinstance(rng, random.Random):
        rng = random.Random(rng)
    e = seed
    while e.vertex_count < n:
        fs = faces(e)
        f = fs[0] if face_policy == "lex" else rng.choice(fs)  # type: ignore[union-attr]
        e = split_face(e, f)
    return e


# ---------------------------------------------------------------------------
# Isomorphism
# ---------------------------------------------------------------------------

def graph_isomorphisms(a: GraphLike, b: GraphLike, cap: int | None = MAX_ISO_VERTICES
                       ) -> Iterator[tuple[int, ...]]:
    """Yield every adjacency-preserving bijection ``phi`` with ``phi[v]`` in ``b``.

    Backtracking over vertices of ``a`` in decreasing-degree order, with
    candidates restricted to equal degree and consistent adjacency to the
    vertices already mapped.
    """
    ma, mb = adjacency_masks(a), adjacency_masks(b)
    n = len(ma)
    if cap is not None and max(n, len(mb)) > cap:
        raise SurgeryError(f"isomorphism test is capped at {cap} vertices")
    if n != len(mb):
        return
    deg_a = [m.bit_count() for m in ma]
    deg_b = [m.bit_count() for m in mb]
    if sorted(deg_a) != sorted(deg_b):
        return
    order = sorted(range(n), key=lambda v: (-deg_a[v], v))
    phi = [-1] * n
    used = [False] * n

    def extend(depth: int) -> Iterator[tuple[int, ...]]:
        if depth == n:
            yield tuple(phi)
            return
        v = order[depth]
        for t in range(n):
            if used[t] or deg_b[t] != deg_a[v]:
                continue
            ok = True
            for u in order[:depth]:
                if (ma[v] >> u & 1) != (mb[t] >> phi[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = t
            used[t] = True
            yield from extend(depth + 1)
            used[t] = False
            phi[v] = -1

    yield from extend(0)


def isomorphic(a: GraphLike, b: GraphLike) -> bool:
    """Abstract-graph isomorphism; the embeddings themselves are ignored."""
    return next(graph_isomorphisms(a, b), None) is not None


def embeddings_isomorphic(a: Embedding, b: Embedding, cap: int | None = MAX_ISO_VERTICES) -> bool:
    """Whether some vertex bijection carries the faces of ``a`` onto those of ``b``."""
    target = sorted(b.face_multiset())
    fa = a.face_multiset()
    for phi in graph_isomorphisms(a, b, cap=cap):
        if sorted(tuple(sorted(phi[v] for v in f)) for f in fa) == target:
            return True
    return False
