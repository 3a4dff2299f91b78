"""Simple connected graphs and the subdivision / triangulation operators."""

from __future__ import annotations

import enum
import os
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .exceptions import (
    Disconnected,
    DuplicateEdge,
    ParseError,
    SelfLoop,
    SizeOverflow,
    TooFewVertices,
    VertexOutOfRange,
)

DEFAULT_VERTEX_CAP = 10**6
VERTEX_CAP_ENV = "KIRCHHOFF_VERTEX_CAP"

Edge = tuple[int, int]


class Provenance(enum.Enum):
    ORIGINAL = "original"
    INSERTED = "inserted"


class TransformKind(enum.Enum):
    SUBDIVISION = "S"
    TRIANGULATION = "T"

    @classmethod
    def parse(cls, value) -> "TransformKind":
        if isinstance(value, cls):
            return value
        key = str(value).strip().upper()
        aliases = {"S": cls.SUBDIVISION, "SUBDIVISION": cls.SUBDIVISION,
                   "T": cls.TRIANGULATION, "TRIANGULATION": cls.TRIANGULATION}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown transform {value!r}; expected 'S' or 'T'") from None


@dataclass(frozen=True)
class SizePrediction:
    n_k: int
    m_k: int
    k: int


@dataclass(frozen=True, eq=True)
class Graph:
    """Immutable simple undirected graph.

    ``edges`` is kept canonical: each pair as ``(small, large)``, the list
    sorted. ``parents[i]`` is ``None`` for an original vertex, or the
    endpoints of the edge that vertex ``i`` was inserted into by the most
    recent transform.

    Construct through :func:`from_edge_list` to get validation; the
    transforms build valid graphs directly.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    parents: tuple[Optional[Edge], ...] = field(default=())

    def __post_init__(self):
        if not self.parents:
            object.__setattr__(self, "parents", (None,) * self.vertex_count)

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset, ...]:
        nbrs = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def neighbors(self, i: int) -> frozenset:
        return self.adjacency_sets[i]

    def provenance(self, i: int) -> Provenance:
        return Provenance.ORIGINAL if self.parents[i] is None else Provenance.INSERTED

    def parent_edge(self, i: int) -> Optional[Edge]:
        return self.parents[i]

    @property
    def original_vertices(self) -> list[int]:
        return [i for i, p in enumerate(self.parents) if p is None]

    @property
    def inserted_vertices(self) -> list[int]:
        return [i for i, p in enumerate(self.parents) if p is not None]

    def is_regular(self) -> Optional[int]:
        """Common degree if the graph is regular, else ``None``."""
        degs = set(self.degrees)
        return degs.pop() if len(degs) == 1 else None

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``i`` renamed to ``perm[i]`` (provenance dropped)."""
        pairs = [(perm[u], perm[v]) for u, v in self.edges]
        return Graph(self.vertex_count, _canonical(pairs))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def _canonical(pairs: Iterable[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted((u, v) if u < v else (v, u) for u, v in pairs))


def _first_unreachable(n: int, edges: Sequence[Edge]) -> Optional[int]:
    nbrs = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    for i, s in enumerate(seen):
        if not s:
            return i
    return None


def from_edge_list(pairs: Iterable[Sequence[int]], vertex_count: int) -> Graph:
    """Validate ``pairs`` and return the canonical :class:`Graph`.

    Raises :class:`TooFewVertices`, :class:`VertexOutOfRange`,
    :class:`SelfLoop`, :class:`DuplicateEdge` or :class:`Disconnected`.
    Duplicates are reported, never silently merged.
    """
    vertex_count = int(vertex_count)
    if vertex_count < 2:
        raise TooFewVertices(vertex_count)
    seen = set()
    canon = []
    for pair in pairs:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < vertex_count:
                raise VertexOutOfRange(x, vertex_count)
        if u == v:
            raise SelfLoop(u)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(e)
        seen.add(e)
        canon.append(e)
    canon.sort()
    missing = _first_unreachable(vertex_count, canon)
    if missing is not None:
        raise Disconnected(missing)
    return Graph(vertex_count, tuple(canon))


def subdivide(g: Graph) -> Graph:
    """Replace every edge ``kl`` by a path ``k - w - l``.

    The vertex inserted into the i-th canonical edge gets id ``n + i``.
    """
    n = g.n
    new_edges = []
    parents: list[Optional[Edge]] = [None] * n
    for i, (k, l) in enumerate(g.edges):
        w = n + i
        new_edges.append((k, w))
        new_edges.append((l, w))
        parents.append((k, l))
    return Graph(n + g.m, _canonical(new_edges), tuple(parents))


def triangulate(g: Graph) -> Graph:
    """Keep every edge ``kl`` and add a vertex ``w`` adjacent to both ends."""
    n = g.n
    new_edges = list(g.edges)
    parents: list[Optional[Edge]] = [None] * n
    for i, (k, l) in enumerate(g.edges):
        w = n + i
        new_edges.append((k, w))
        new_edges.append((l, w))
        parents.append((k, l))
    return Graph(n + g.m, _canonical(new_edges), tuple(parents))


def apply_transform(g: Graph, kind) -> Graph:
    kind = TransformKind.parse(kind)
    return subdivide(g) if kind is TransformKind.SUBDIVISION else triangulate(g)


def predict_sizes(n: int, m: int, kind, k: int) -> SizePrediction:
    """Vertex and edge counts of the k-th iterated transform.

    Exact integer arithmetic: ``S^k`` has ``n + (2^k - 1) m`` vertices and
    ``2^k m`` edges; ``T^k`` has ``(3^k - 1) m / 2 + n`` and ``3^k m``.
    """
    kind = TransformKind.parse(kind)
    if n < 2:
        raise TooFewVertices(n)
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if kind is TransformKind.SUBDIVISION:
        return SizePrediction(n + (2**k - 1) * m, 2**k * m, k)
    return SizePrediction((3**k - 1) // 2 * m + n, 3**k * m, k)


def vertex_cap() -> int:
    raw = os.environ.get(VERTEX_CAP_ENV)
    if raw is None or not raw.strip():
        return DEFAULT_VERTEX_CAP
    return int(raw)


def iterate_transform(g: Graph, kind, k: int, cap: Optional[int] = None) -> Graph:
    """Apply the transform ``k`` times; ``k = 0`` returns ``g`` itself.

    Raises :class:`SizeOverflow` before building anything if the predicted
    vertex count exceeds ``cap`` (default: ``$KIRCHHOFF_VERTEX_CAP`` or 10**6).
    """
    kind = TransformKind.parse(kind)
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if k == 0:
        return g
    cap = vertex_cap() if cap is None else cap
    size = predict_sizes(g.n, g.m, kind, k)
    if size.n_k > cap:
        raise SizeOverflow(
            f"{kind.value}^{k} would have {size.n_k} vertices, cap is {cap}"
        )
    for _ in range(k):
        g = apply_transform(g, kind)
    return g


# -- edge-list text format ---------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``; ``#`` starts a comment."""
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative count in header", lineno)
            header = (a, b, lineno)
        else:
            pairs.append((a, b, lineno))
    if header is None:
        raise ParseError("missing 'n m' header")
    n, m, hline = header
    if len(pairs) != m:
        raise ParseError(f"header declares {m} edges, found {len(pairs)}", hline)
    for a, b, lineno in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex id out of range [0, {n}) in '{a} {b}'", lineno)
    return from_edge_list([(a, b) for a, b, _ in pairs], n)


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    inserted = g.inserted_vertices
    if inserted:
        lines.append("# provenance: inserted-vertex parent-edge-u parent-edge-v")
        lines.extend(f"# inserted {i} {g.parents[i][0]} {g.parents[i][1]}" for i in inserted)
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g, comments))


# -- named families -----------------------------------------------------------

def path_graph(n: int) -> Graph:
    return from_edge_list([(i, i + 1) for i in range(n - 1)], n)


def cycle_graph(n: int) -> Graph:
    return from_edge_list([(i, (i + 1) % n) for i in range(n)], n)


def star_graph(leaves: int) -> Graph:
    return from_edge_list([(0, i) for i in range(1, leaves + 1)], leaves + 1)


def complete_graph(n: int) -> Graph:
    return from_edge_list([(i, j) for i in range(n) for j in range(i + 1, n)], n)


def random_connected_graph(n: int, p: float, rng) -> Graph:
    """Random spanning tree on ``n`` vertices plus each other pair with prob. ``p``."""
    order = rng.permutation(n)
    edges = set()
    for idx in range(1, n):
        u = int(order[idx])
        v = int(order[rng.integers(idx)])
        edges.add((min(u, v), max(u, v)))
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < p:
                edges.add((i, j))
    return from_edge_list(sorted(edges), n)
