"""Simple undirected graphs with bit-row adjacency.

Vertices are the integers ``0..n-1``.  A :class:`Graph` stores one Python
integer per vertex whose set bits are that vertex's neighbours, which keeps
neighbourhood intersections and enumeration inner loops cheap.  Graphs are
immutable; every operation here is a pure function.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ``rows[v]`` is the neighbour bitmask of ``v``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(self.rows) != self.n:
            raise ValueError("rows must have one mask per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex >= n")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.rows[v]):
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(r.bit_count() for r in self.rows))


@dataclass(frozen=True)
class CutVertexWitness:
    """A cut vertex together with the split it induces.

    ``components`` are the vertex sets of the components of ``G - u`` and
    ``branch_degrees[i]`` counts the edges from ``u`` into ``components[i]``.
    The branch degrees sum to ``deg(u)``.
    """

    u: int
    components: tuple[frozenset[int], ...]
    branch_degrees: tuple[int, ...]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def graph_from_edges(n: int, edges) -> Graph:
    """Build a graph on ``n`` vertices from an iterable of (u, v) pairs."""
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete(n: int) -> Graph:
    """Complete graph on ``n >= 1`` vertices."""
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle(n: int) -> Graph:
    """Cycle on ``n >= 3`` vertices."""
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return graph_from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r) & ~(1 << v) for v, r in enumerate(g.rows)))


def matching_complement(n: int) -> Graph:
    """Complement of a perfect matching on ``n`` (even) vertices; (n-2)-regular."""
    if n < 2 or n % 2:
        raise ValueError("a perfect matching needs a positive even order")
    matching = graph_from_edges(n, [(2 * i, 2 * i + 1) for i in range(n // 2)])
    return complement(matching)


def disjoint_union(parts) -> Graph:
    parts = list(parts)
    n = sum(p.n for p in parts)
    rows = []
    offset = 0
    for p in parts:
        rows.extend(r << offset for r in p.rows)
        offset += p.n
    return Graph(n, tuple(rows))


def cycles_union_complement(lengths) -> Graph:
    """Complement of a disjoint union of cycles; (sum(lengths) - 3)-regular."""
    lengths = list(lengths)
    if not lengths or any(k < 3 for k in lengths):
        raise ValueError("every cycle length must be at least 3")
    return complement(disjoint_union(cycle(k) for k in lengths))


def sequential_join(parts) -> Graph:
    """Disjoint union plus all edges between consecutive parts.

    Vertices are labelled block-contiguously in the order the parts are
    listed, so repeated builds give byte-identical encodings.
    """
    parts = list(parts)
    if not parts:
        raise ValueError("sequential join needs at least one part")
    g = disjoint_union(parts)
    rows = list(g.rows)
    offsets = [0]
    for p in parts:
        offsets.append(offsets[-1] + p.n)
    for i in range(len(parts) - 1):
        left = range(offsets[i], offsets[i + 1])
        right_mask = _mask(range(offsets[i + 1], offsets[i + 2]))
        left_mask = _mask(left)
        for v in left:
            rows[v] |= right_mask
        for v in range(offsets[i + 1], offsets[i + 2]):
            rows[v] |= left_mask
    return Graph(g.n, tuple(rows))


def is_regular(g: Graph) -> int | None:
    """The common degree if ``g`` is regular, else ``None``."""
    if g.n == 0:
        return None
    d = g.degree(0)
    return d if all(r.bit_count() == d for r in g.rows) else None


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = _component_mask(g, 0, (1 << g.n) - 1)
    return seen == (1 << g.n) - 1


def _component_mask(g: Graph, start: int, allowed: int) -> int:
    """Bitmask of the component of ``start`` inside the ``allowed`` vertex set."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def connected_components(g: Graph) -> list[frozenset[int]]:
    remaining = (1 << g.n) - 1
    comps = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _component_mask(g, start, remaining)
        comps.append(frozenset(_bits(comp)))
        remaining &= ~comp
    return comps


def articulation_points(g: Graph) -> list[CutVertexWitness]:
    """All cut vertices of a connected graph, with their component splits.

    Uses the classic low-link depth-first search; for each cut vertex the
    components of ``G - u`` and the edge counts from ``u`` into them are
    reported.  Empty result means the graph is 2-connected (or n <= 2).
    """
    if not is_connected(g):
        raise ValueError("articulation points are defined for connected graphs")
    n = g.n
    if n <= 2:
        return []

    index = [-1] * n
    low = [0] * n
    cut = [False] * n
    counter = 0
    # iterative DFS; (vertex, parent, neighbour iterator) frames
    stack = [(0, -1, iter(g.neighbors(0)))]
    index[0] = low[0] = counter
    counter += 1
    root_children = 0
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if index[w] == -1:
                index[w] = low[w] = counter
                counter += 1
                if v == 0:
                    root_children += 1
                stack.append((w, v, iter(g.neighbors(w))))
                advanced = True
                break
            elif w != parent:
                low[v] = min(low[v], index[w])
        if not advanced:
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if pv != 0 and low[v] >= index[pv]:
                    cut[pv] = True
    cut[0] = root_children >= 2

    witnesses = []
    for u in range(n):
        if not cut[u]:
            continue
        allowed = ((1 << n) - 1) & ~(1 << u)
        remaining = allowed
        comps = []
        degs = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            comp = _component_mask(g, start, allowed) & remaining
            comps.append(frozenset(_bits(comp)))
            degs.append((g.rows[u] & comp).bit_count())
            remaining &= ~comp
        witnesses.append(CutVertexWitness(u, tuple(comps), tuple(degs)))
    return witnesses


def edges_between(g: Graph, s, t) -> int:
    """Number of edges with one end in ``s`` and the other in ``t``.

    Each undirected edge is counted once, even when both ends lie in the
    intersection of the two sets.
    """
    smask, tmask = _mask(s), _mask(t)
    if (smask | tmask) >> g.n:
        raise ValueError("vertex set references a vertex >= n")
    total = sum((g.rows[v] & tmask).bit_count() for v in _bits(smask))
    both = smask & tmask
    inner = sum((g.rows[v] & both).bit_count() for v in _bits(both)) // 2
    return total - inner


# ---------------------------------------------------------------------------
# isomorphism


def _refine_colors(g: Graph) -> list[int]:
    """Stable colouring: degree + common-neighbour profile, then iterate
    neighbour-colour multisets to a fixed point."""
    colors = [
        (
            g.degree(v),
            tuple(sorted((g.rows[v] & g.rows[u]).bit_count() for u in _bits(g.rows[v]))),
        )
        for v in range(g.n)
    ]
    ids = _renumber(colors)
    for _ in range(g.n):
        signature = [
            (ids[v], tuple(sorted(ids[u] for u in _bits(g.rows[v])))) for v in range(g.n)
        ]
        new_ids = _renumber(signature)
        if new_ids == ids:
            break
        ids = new_ids
    return ids


def _renumber(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """True iff some bijection of vertex sets preserves adjacency."""
    if a.n != b.n:
        return False
    if a.edge_count() != b.edge_count():
        return False
    if a.degree_sequence() != b.degree_sequence():
        return False
    if a.n == 0:
        return True
    ca, cb = _refine_colors(a), _refine_colors(b)
    if sorted(ca) != sorted(cb):
        return False

    n = a.n
    class_size = {c: ca.count(c) for c in set(ca)}
    # map vertices of `a` in BFS order from a vertex in the rarest class, so
    # every new vertex (in a connected component) is constrained by a mapped
    # neighbour as early as possible
    start = min(range(n), key=lambda v: (class_size[ca[v]], ca[v], v))
    order = []
    seen = set()
    queue = deque([start])
    seen.add(start)
    while queue or len(order) < n:
        if not queue:
            rest = min(
                (v for v in range(n) if v not in seen),
                key=lambda v: (class_size[ca[v]], ca[v], v),
            )
            queue.append(rest)
            seen.add(rest)
        v = queue.popleft()
        order.append(v)
        for w in _bits(a.rows[v]):
            if w not in seen:
                seen.add(w)
                queue.append(w)

    image = [-1] * n
    used = [False] * n

    def assign(k: int) -> bool:
        if k == n:
            return True
        u = order[k]
        for w in range(n):
            if used[w] or cb[w] != ca[u]:
                continue
            ok = True
            for x in order[:k]:
                if ((a.rows[u] >> x) & 1) != ((b.rows[w] >> image[x]) & 1):
                    ok = False
                    break
            if ok:
                image[u] = w
                used[w] = True
                if assign(k + 1):
                    return True
                used[w] = False
                image[u] = -1
        return False

    return assign(0)


def relabel(g: Graph, perm) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    perm = list(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return graph_from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# ---------------------------------------------------------------------------
# serialization


_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Standard printable graph6 encoding (column-major upper triangle)."""
    n = g.n
    if n <= 62:
        prefix = [n + 63]
    elif n <= 258047:
        prefix = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    else:
        raise ValueError("graph too large for this graph6 encoder")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append((g.rows[i] >> j) & 1)
    while len(bits) % 6:
        bits.append(0)
    data = []
    for k in range(0, len(bits), 6):
        val = 0
        for bit in bits[k : k + 6]:
            val = (val << 1) | bit
        data.append(val + 63)
    return bytes(prefix + data).decode("ascii")


def from_graph6(text: str) -> Graph:
    """Decode a graph6 line; raises ValueError on any malformed input."""
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :]
    if not s:
        raise ValueError("empty graph6 string")
    data = s.encode("ascii", errors="strict")
    if any(b < 63 or b > 126 for b in data):
        raise ValueError("graph6 byte out of range 63..126")
    if data[0] == 126:
        if len(data) < 4 or data[1] == 126:
            raise ValueError("unsupported or truncated graph6 size header")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise ValueError(f"graph6 body length {len(body)}, expected {expect}")
    bits = []
    for byte in body:
        val = byte - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 encoding")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def to_edge_list_text(g: Graph) -> str:
    """Human-readable alternative format: ``n=<count>`` header, one edge per line."""
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError('edge list text must start with an "n=<count>" header')
    try:
        n = int(lines[0][2:])
    except ValueError as exc:
        raise ValueError("bad vertex count in edge list header") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return graph_from_edges(n, edges)
