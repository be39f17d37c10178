"""Immutable bitset graphs and the structural primitives built on them.

A graph on n <= 128 vertices is stored as one adjacency bitmask per vertex.
Vertex sets are plain Python ints interpreted as bitmasks over {0..n-1},
which keeps the inner loops of the solvers branch-light and allocation-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

MAX_VERTICES = 128

# A vertex set is a bitmask over {0..n-1} of its host graph.
VertexSet = int


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class GraphError(ValueError):
    """Invalid graph construction or an argument outside a graph's domain."""


class Graph6Error(GraphError):
    """Malformed graph6 or edge-list input; carries the offending byte offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True, slots=True)
class Graph:
    """Simple undirected graph with one adjacency bitmask row per vertex.

    Immutable after construction and safe to share across threads. The
    adjacency relation is symmetric and irreflexive by construction.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise GraphError(f"expected {self.n} adjacency rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} references vertices >= {self.n}")
            if row >> u & 1:
                raise GraphError(f"self-loop at vertex {u}")
        for u in range(self.n):
            for v in bits(self.rows[u]):
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _raw(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # Trusted internal constructor: skips invariant validation.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)]) if n >= 3 else cls.empty(n)

    @property
    def full_mask(self) -> VertexSet:
        return (1 << self.n) - 1

    def adj(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) pairs with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in bits(self.rows[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(self.degree(u) for u in range(self.n)) // 2


# ---------------------------------------------------------------------------
# graph6 wire format
# ---------------------------------------------------------------------------

_HEADER = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one line of graph6 into a Graph.

    Accepts the optional ``>>graph6<<`` prefix. Raises :class:`Graph6Error`
    naming the byte offset on malformed input.
    """
    s = text.strip()
    base = 0
    if s.startswith(_HEADER):
        base = len(_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base)

    data = [ord(c) for c in s]
    for i, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"character {s[i]!r} outside graph6 range 63..126", base + i)

    pos = 0
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise Graph6Error("truncated extended vertex-count header", base + len(data))
            n = 0
            for byte in data[2:8]:
                n = n << 6 | (byte - 63)
            pos = 8
        else:
            if len(data) < 4:
                raise Graph6Error("truncated extended vertex-count header", base + len(data))
            n = 0
            for byte in data[1:4]:
                n = n << 6 | (byte - 63)
            pos = 4
    else:
        n = data[0] - 63
        pos = 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds supported maximum {MAX_VERTICES}", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(
            f"truncated bit body: need {nbytes} bytes, found {len(data) - pos}",
            base + len(data),
        )
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing bytes after bit body", base + pos + nbytes)

    rows = [0] * n
    bit_index = 0
    # Upper triangle, column-major: columns v = 1..n-1, rows u = 0..v-1.
    for byte in data[pos:pos + nbytes]:
        group = byte - 63
        for k in range(5, -1, -1):
            if bit_index >= nbits:
                break
            if group >> k & 1:
                u, v = _triangle_coords(bit_index)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            bit_index += 1
    return Graph._raw(n, tuple(rows))


def _triangle_coords(bit_index: int) -> tuple[int, int]:
    # Inverse of the column-major upper-triangle enumeration: column v
    # contributes v bits, so bit_index falls in column v with
    # v(v-1)/2 <= bit_index < v(v+1)/2.
    v = int(((8 * bit_index + 1) ** 0.5 + 1) / 2)
    while v * (v - 1) // 2 > bit_index:
        v -= 1
    while (v + 1) * v // 2 <= bit_index:
        v += 1
    u = bit_index - v * (v - 1) // 2
    return u, v


def encode_graph6(g: Graph) -> str:
    """Encode a Graph as a graph6 line; inverse of :func:`parse_graph6`."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr((n >> shift & 63) + 63) for shift in (12, 6, 0))
    chunks = []
    group = 0
    nbits = 0
    for v in range(1, n):
        col = g.rows[v]
        for u in range(v):
            group = group << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                chunks.append(chr(group + 63))
                group = 0
                nbits = 0
    if nbits:
        chunks.append(chr((group << (6 - nbits)) + 63))
    return head + "".join(chunks)


def parse_edge_list(text: str) -> Graph:
    """Decode the plain edge-list format: first line ``n m``, then m lines ``u v``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise Graph6Error("empty edge-list input", 0)
    head = lines[0].split()
    if len(head) != 2 or not all(tok.isdigit() for tok in head):
        raise Graph6Error("edge-list header must be 'n m'", 0)
    n, m = int(head[0]), int(head[1])
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds supported maximum {MAX_VERTICES}", 0)
    if len(lines) - 1 != m:
        raise Graph6Error(f"expected {m} edge lines, found {len(lines) - 1}", 0)
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2 or not all(tok.isdigit() for tok in parts):
            raise Graph6Error(f"bad edge line {ln!r}", 0)
        edges.append((int(parts[0]), int(parts[1])))
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise Graph6Error(str(exc), 0) from exc


# ---------------------------------------------------------------------------
# Structural primitives
# ---------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._raw(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.rows)))


def induced_subgraph(g: Graph, members: VertexSet) -> tuple[Graph, list[int]]:
    """Subgraph induced by the vertex set ``members``.

    Returns the relabeled graph together with the list mapping new labels
    back to the originals.
    """
    labels = list(bits(members))
    index = {v: i for i, v in enumerate(labels)}
    rows = [0] * len(labels)
    for i, v in enumerate(labels):
        for w in bits(g.rows[v] & members):
            rows[i] |= 1 << index[w]
    return Graph._raw(len(labels), tuple(rows)), labels


def independence_at_most_2(g: Graph) -> bool:
    """True iff the graph has no independent set of three vertices.

    Equivalent to the complement being triangle-free.
    """
    full = g.full_mask
    for u in range(g.n):
        non_u = ~g.rows[u] & full & ~((1 << (u + 1)) - 1)
        for v in bits(non_u):
            if ~g.rows[u] & ~g.rows[v] & full & ~((1 << (v + 1)) - 1):
                return False
    return True


def neighborhood(g: Graph, v: int) -> VertexSet:
    return g.rows[v]


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    return g.rows[v] | 1 << v


def non_neighborhood(g: Graph, v: int) -> VertexSet:
    """Vertices distinct from v and non-adjacent to it."""
    return ~g.rows[v] & g.full_mask & ~(1 << v)


def common_neighborhood(g: Graph, members: VertexSet) -> VertexSet:
    """Vertices outside ``members`` adjacent to every vertex of it."""
    if not members:
        raise GraphError("common_neighborhood requires a nonempty vertex set")
    acc = g.full_mask
    for v in bits(members):
        acc &= g.rows[v]
    return acc & ~members


def is_clique(g: Graph, members: VertexSet) -> bool:
    """True iff ``members`` induces a complete subgraph (the empty set counts)."""
    rest = members
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        rest ^= low
        if rest & ~g.rows[v]:
            return False
    return True


def _check_disjoint(a: VertexSet, b: VertexSet) -> None:
    if a & b:
        raise GraphError("vertex sets overlap")


def is_anticomplete(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """True iff no edge joins ``a`` and ``b`` (vacuously true when either is empty)."""
    _check_disjoint(a, b)
    for v in bits(a):
        if g.rows[v] & b:
            return False
    return True


def is_complete_between(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    """True iff every vertex of ``a`` is adjacent to every vertex of ``b``."""
    _check_disjoint(a, b)
    for v in bits(a):
        if b & ~g.rows[v]:
            return False
    return True


def find_triangle(g: Graph, members: Optional[VertexSet] = None) -> Optional[tuple[int, int, int]]:
    """Lexicographically least triangle inside ``members`` (default: all vertices)."""
    scope = g.full_mask if members is None else members
    for u in bits(scope):
        above_u = scope & g.rows[u] & ~((1 << (u + 1)) - 1)
        for v in bits(above_u):
            w_set = above_u & g.rows[v] & ~((1 << (v + 1)) - 1)
            if w_set:
                w = (w_set & -w_set).bit_length() - 1
                return (u, v, w)
    return None


def triangle_count(g: Graph) -> int:
    total = 0
    for u in range(g.n):
        above = g.rows[u] & ~((1 << (u + 1)) - 1)
        for v in bits(above):
            total += (above & g.rows[v] & ~((1 << (v + 1)) - 1)).bit_count()
    return total


def clique_number(g: Graph) -> int:
    """Exact maximum clique size (0 for the empty graph).

    Branch and bound with a greedy-coloring upper bound; exponential in the
    worst case but fast for the instance sizes this library targets.
    """
    from .cliques import max_clique

    return max_clique(g.rows).size
