"""Triangulations of closed surfaces stored as rotation systems.

A triangulation is given by listing, for every vertex, its neighbours in
cyclic order around it.  Consecutive neighbours in a rotation span a
triangular face, so the faces, the Euler characteristic and the
orientability of the underlying surface can all be read off the rotations.

Two text encodings are supported.  The letter format puts one
comma-separated token per vertex, with ``a`` standing for vertex 1::

    bcd,acd,abd,abc          # K4 on the sphere

The numeric format is used beyond 26 vertices: one line per vertex holding
the space-separated 1-based neighbour indices, terminated by a blank line
or end of input.
"""

from __future__ import annotations

import string
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "EmbeddingError",
    "ParseError",
    "Surface",
    "FaceHandle",
    "Embedding",
    "parse_embedding",
    "parse_numeric",
    "read_embedding",
    "serialize_embedding",
    "serialize_numeric",
    "format_embedding",
    "faces",
    "euler_characteristic",
    "is_orientable",
    "surface_of",
]

MAX_LETTER_VERTICES = 26
_LETTERS = string.ascii_lowercase


class EmbeddingError(ValueError):
    """Raised when a rotation system is not a valid surface triangulation."""


class ParseError(EmbeddingError):
    """Malformed embedding text.

    Attributes:
        line: 1-based line of the offending input, if known.
        column: 1-based column of the offending input, if known.
    """

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


@dataclass(frozen=True, order=True)
class Surface:
    """A closed surface: ``S_g`` when orientable, ``N_h`` otherwise."""

    orientable: bool
    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError(f"genus must be non-negative, got {self.genus}")
        if not self.orientable and self.genus < 1:
            raise ValueError("a non-orientable surface has at least one crosscap")

    @property
    def chi(self) -> int:
        """Euler characteristic."""
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    @property
    def name(self) -> str:
        return f"{'S' if self.orientable else 'N'}{self.genus}"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "Surface":
        """Parse ``S<g>`` or ``N<h>`` (case-insensitive)."""
        text = text.strip()
        if len(text) < 2 or text[0].upper() not in "SN" or not text[1:].isdigit():
            raise ValueError(f"malformed surface {text!r}; expected S<g> or N<h>")
        return cls(text[0].upper() == "S", int(text[1:]))

    @classmethod
    def from_chi(cls, chi: int, orientable: bool) -> "Surface":
        if orientable:
            if chi % 2:
                raise ValueError(f"no orientable surface has odd Euler characteristic {chi}")
            return cls(True, (2 - chi) // 2)
        return cls(False, 2 - chi)


@dataclass(frozen=True, order=True)
class FaceHandle:
    """One triangular face, identified by its three corners.

    Each corner is ``(vertex, index)``: the face sits between positions
    ``index`` and ``index + 1`` (cyclically) of that vertex's rotation.
    Corners are stored sorted by vertex.  Faces need this identity because
    K3 on the sphere has two faces on the same vertex set.
    """

    corners: tuple[tuple[int, int], tuple[int, int], tuple[int, int]]

    @property
    def vertices(self) -> tuple[int, int, int]:
        return tuple(v for v, _ in self.corners)  # type: ignore[return-value]

    def sort_key(self):
        return (self.vertices, tuple(i for _, i in self.corners))


@dataclass(frozen=True)
class Embedding:
    """A triangulation of a closed surface given by vertex rotations.

    Vertices are ``0 .. n-1``; ``rotations[v]`` lists the neighbours of
    ``v`` in cyclic order.  The direction of each rotation is immaterial.
    Instances are validated on construction and never mutated.
    """

    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rots = tuple(tuple(int(u) for u in r) for r in self.rotations)
        object.__setattr__(self, "rotations", rots)
        _validate(rots)

    @property
    def vertex_count(self) -> int:
        return len(self.rotations)

    def __len__(self) -> int:
        return len(self.rotations)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.rotations)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in r) for r in self.rotations)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted((v, u) for v, r in enumerate(self.rotations) for u in r if v < u))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def face_count(self) -> int:
        return 2 * self.edge_count // 3

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    def min_degree(self) -> int:
        return min(len(r) for r in self.rotations)

    def face_multiset(self) -> tuple[tuple[int, int, int], ...]:
        """Sorted vertex triples of all faces."""
        return tuple(sorted(f.vertices for f in faces(self)))

    def __str__(self) -> str:
        return format_embedding(self)


def _validate(rots: Sequence[Sequence[int]]) -> None:
    n = len(rots)
    if n < 3:
        raise EmbeddingError(f"a triangulation needs at least 3 vertices, got {n}")
    nbrs = []
    for v, r in enumerate(rots):
        s = set(r)
        if len(s) != len(r):
            raise EmbeddingError(f"duplicate neighbour in rotation of vertex {_label(v, n)}")
        if v in s:
            raise EmbeddingError(f"vertex {_label(v, n)} lists itself")
        bad = [u for u in r if not 0 <= u < n]
        if bad:
            raise EmbeddingError(f"vertex {_label(v, n)} references unknown vertex {bad[0] + 1}")
        nbrs.append(s)
    for v, s in enumerate(nbrs):
        for u in s:
            if v not in nbrs[u]:
                raise EmbeddingError(
                    f"asymmetric adjacency: {_label(v, n)} lists {_label(u, n)} but not conversely"
                )
    # K3 on the sphere is the only triangulation with a degree-2 vertex
    min_deg = 2 if n == 3 else 3
    for v, r in enumerate(rots):
        if len(r) < min_deg:
            raise EmbeddingError(f"not a triangulation: vertex {_label(v, n)} has degree {len(r)}")
    for v, r in enumerate(rots):
        d = len(r)
        for i, u in enumerate(r):
            w = r[(i + 1) % d]
            if w not in nbrs[u]:
                raise EmbeddingError(
                    f"not a triangulation: consecutive neighbours {_label(u, n)},{_label(w, n)} "
                    f"of {_label(v, n)} are not adjacent"
                )
    for v, r in enumerate(rots):
        d = len(r)
        for i, u in enumerate(r):
            around_v = {r[i - 1], r[(i + 1) % d]}
            ru = rots[u]
            j = ru.index(v)
            around_u = {ru[j - 1], ru[(j + 1) % len(ru)]}
            if around_v != around_u:
                raise EmbeddingError(
                    f"not a triangulation: links of {_label(v, n)} and {_label(u, n)} disagree"
                )
    edge_total = sum(len(r) for r in rots)
    if edge_total % 3:
        raise EmbeddingError("not a triangulation: 2E is not divisible by 3")
    if not _connected(nbrs):
        raise EmbeddingError("graph is disconnected")


def _connected(nbrs: Sequence[Iterable[int]]) -> bool:
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in nbrs[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == len(nbrs)


def _label(v: int, n: int) -> str:
    return _LETTERS[v] if n <= MAX_LETTER_VERTICES else str(v + 1)


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def parse_embedding(text: str) -> Embedding:
    """Parse the comma-separated letter format.

    >>> parse_embedding("bcd,acd,abd,abc").edge_count
    6
    """
    text = text.strip()
    if not text:
        raise ParseError("empty embedding text")
    tokens = text.split(",")
    n = len(tokens)
    if n > MAX_LETTER_VERTICES:
        raise ParseError(f"letter format holds at most {MAX_LETTER_VERTICES} vertices, got {n}")
    rots = []
    col = 1
    for v, tok in enumerate(tokens):
        rot = []
        for k, ch in enumerate(tok):
            if ch not in _LETTERS:
                raise ParseError(f"unexpected character {ch!r} in list of vertex {_LETTERS[v]}",
                                 column=col + k)
            u = ord(ch) - ord("a")
            if u >= n:
                raise ParseError(
                    f"vertex {_LETTERS[v]} references {ch} but only {n} lists are given",
                    column=col + k,
                )
            rot.append(u)
        if not rot:
            raise ParseError(f"empty list for vertex {_LETTERS[v]}", column=col)
        rots.append(tuple(rot))
        col += len(tok) + 1
    return Embedding(tuple(rots))


def parse_numeric(text: str) -> Embedding:
    """Parse the numeric format (1-based indices, one vertex per line)."""
    rots = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            if rots:
                break
            continue
        rot = []
        for field in line.split():
            col = line.index(field) + 1
            if not field.isdigit() or int(field) < 1:
                raise ParseError(f"bad vertex index {field!r}", line=lineno, column=col)
            rot.append(int(field) - 1)
        rots.append(tuple(rot))
    if not rots:
        raise ParseError("empty embedding text")
    n = len(rots)
    for v, rot in enumerate(rots):
        for u in rot:
            if u >= n:
                raise ParseError(f"vertex {v + 1} references {u + 1} but only {n} lines are given",
                                 line=v + 1)
    return Embedding(tuple(rots))


def read_embedding(text: str) -> Embedding:
    """Parse either format, choosing the numeric one when digits appear."""
    if any(ch.isdigit() for ch in text):
        return parse_numeric(text)
    return parse_embedding(text)


def _canonical_rotation(rot: Sequence[int]) -> tuple[int, ...]:
    # start at the smallest neighbour, then step towards the smaller of its two rotation-neighbours
    d = len(rot)
    i = rot.index(min(rot))
    fwd = tuple(rot[(i + k) % d] for k in range(d))
    back = tuple(rot[(i - k) % d] for k in range(d))
    return min(fwd, back)


def serialize_embedding(e: Embedding) -> str:
    """Deterministic letter-format text; rotations canonicalised per vertex."""
    if e.vertex_count > MAX_LETTER_VERTICES:
        raise EmbeddingError(
            f"letter format holds at most {MAX_LETTER_VERTICES} vertices, got {e.vertex_count}"
        )
    return ",".join("".join(_LETTERS[u] for u in _canonical_rotation(r)) for r in e.rotations)


def serialize_numeric(e: Embedding) -> str:
    lines = [" ".join(str(u + 1) for u in _canonical_rotation(r)) for r in e.rotations]
    return "\n".join(lines) + "\n"


def format_embedding(e: Embedding) -> str:
    """Letter format when it fits, numeric format otherwise."""
    if e.vertex_count <= MAX_LETTER_VERTICES:
        return serialize_embedding(e)
    return serialize_numeric(e)


# ---------------------------------------------------------------------------
# Faces and the surface
# ---------------------------------------------------------------------------

def _corner_lookup(e: Embedding) -> dict[tuple[int, frozenset[int]], list[int]]:
    # (vertex, {other two face vertices}) -> corner indices at that vertex, ascending.
    # The list has two entries only for K3, where both faces share a vertex set.
    table: dict[tuple[int, frozenset[int]], list[int]] = defaultdict(list)
    for v, r in enumerate(e.rotations):
        d = len(r)
        for i in range(d):
            table[v, frozenset((r[i], r[(i + 1) % d]))].append(i)
    return table


def faces(e: Embedding) -> list[FaceHandle]:
    """All faces of ``e``, sorted by vertex triple then corner indices."""
    table = _corner_lookup(e)
    out = set()
    for v, r in enumerate(e.rotations):
        d = len(r)
        for i in range(d):
            x, y = r[i], r[(i + 1) % d]
            rank = table[v, frozenset((x, y))].index(i)
            corners = [(v, i)]
            for u, others in ((x, (v, y)), (y, (v, x))):
                corners.append((u, table[u, frozenset(others)][rank]))
            out.add(FaceHandle(tuple(sorted(corners))))  # type: ignore[arg-type]
    result = sorted(out, key=FaceHandle.sort_key)
    assert len(result) == e.face_count, "corner grouping is inconsistent"
    return result


def euler_characteristic(e: Embedding) -> int:
    return e.vertex_count - e.edge_count + e.face_count


def _face_cycle(e: Embedding, f: FaceHandle) -> tuple[int, int, int]:
    v, i = f.corners[0]
    r = e.rotations[v]
    return (v, r[i], r[(i + 1) % len(r)])


def is_orientable(e: Embedding) -> bool:
    """Whether the faces can be oriented so every edge is traversed both ways.

    Each face gets a reference cyclic order; a BFS over face adjacency
    assigns each face a flip bit and stops at the first conflict.
    """
    if not _connected(e.neighbor_sets):
        raise EmbeddingError("orientability is only defined for connected embeddings")
    fs = faces(e)
    cycles = [_face_cycle(e, f) for f in fs]
    # directed edge (a, b) -> faces traversing it as written
    by_edge: dict[frozenset[int], list[tuple[int, tuple[int, int]]]] = defaultdict(list)
    for k, (a, b, c) in enumerate(cycles):
        for p, q in ((a, b), (b, c), (c, a)):
            by_edge[frozenset((p, q))].append((k, (p, q)))
    flip: list[int | None] = [None] * len(fs)
    flip[0] = 0
    queue = deque([0])
    while queue:
        k = queue.popleft()
        a, b, c = cycles[k]
        for p, q in ((a, b), (b, c), (c, a)):
            for other, (s, t) in by_edge[frozenset((p, q))]:
                if other == k:
                    continue
                same_direction = (s, t) == (p, q)
                want = flip[k] ^ 1 if same_direction else flip[k]
                if flip[other] is None:
                    flip[other] = want
                    queue.append(other)
                elif flip[other] != want:
                    return False
    return True


def surface_of(e: Embedding) -> Surface:
    chi = euler_characteristic(e)
    orientable = is_orientable(e)
    if orientable and chi % 2:
        raise EmbeddingError(f"orientable embedding with odd Euler characteristic {chi}")
    return Surface.from_chi(chi, orientable)
