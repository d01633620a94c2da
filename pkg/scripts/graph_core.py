#!/usr/bin/env python
"""
Immutable bit-vector graphs for the Turán workbench.

A graph on at most 64 vertices stores one neighbourhood bit-vector per vertex,
so neighbourhood intersection is a single ``&``. Builders use a fixed vertex
numbering so that graph6 encodings are reproducible byte for byte.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from scripts.errors import ArgumentError, Graph6ParseError, SizeError

MAX_ORDER = 64

# A subset of vertices, bit v set iff vertex v is a member.
VertexSet = int

GRAPH6_HEADER = b">>graph6<<"


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Build a VertexSet from vertex indices."""
    bits = 0
    for v in vertices:
        if v < 0 or v >= MAX_ORDER:
            raise SizeError(f"vertex {v} outside [0, {MAX_ORDER})")
        bits |= 1 << v
    return bits


def members(bits: VertexSet) -> List[int]:
    """Vertex indices of a VertexSet, ascending."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def _check_order(n: int) -> None:
    if n < 0 or n > MAX_ORDER:
        raise SizeError(f"graph order {n} outside [0, {MAX_ORDER}]")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; ``adj[v]`` is the neighbourhood bit-vector of v."""

    order: int
    adj: Tuple[int, ...]

    def __post_init__(self):
        _check_order(self.order)
        if len(self.adj) != self.order:
            raise ArgumentError(f"expected {self.order} adjacency rows, got {len(self.adj)}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        _check_order(n)
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ArgumentError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ArgumentError(f"edge ({u}, {v}) outside a graph of order {n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.order) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges (u, v) with u < v, in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in members(row >> (u + 1)):
                yield u, u + 1 + v

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def max_degree(self) -> int:
        return max((row.bit_count() for row in self.adj), default=0)

    def neighbors(self, v: int) -> List[int]:
        return members(self.adj[v])

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise ArgumentError(f"self-loop at vertex {u}")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.order, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.order, tuple(rows))

    def permute(self, perm: Sequence[int]) -> "Graph":
        """Relabel vertex v as ``perm[v]``."""
        if sorted(perm) != list(range(self.order)):
            raise ArgumentError("perm is not a permutation of the vertex set")
        rows = [0] * self.order
        for v, row in enumerate(self.adj):
            image = 0
            for u in members(row):
                image |= 1 << perm[u]
            rows[perm[v]] = image
        return Graph(self.order, tuple(rows))

    def is_valid(self) -> bool:
        """Check symmetry, irreflexivity and that no bit lies at or above ``order``."""
        full = self.vertices
        for v, row in enumerate(self.adj):
            if row & ~full or (row >> v) & 1:
                return False
            for u in members(row):
                if not (self.adj[u] >> v) & 1:
                    return False
        return True


# --- builders -------------------------------------------------------------


def make_empty(n: int) -> Graph:
    """I_n: n isolated vertices."""
    _check_order(n)
    return Graph(n, (0,) * n)


def make_complete(n: int) -> Graph:
    """K_n."""
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def make_matching(n: int) -> Graph:
    """M_n: edges {2i, 2i+1} for i < n // 2, plus one isolated vertex when n is odd."""
    _check_order(n)
    rows = [0] * n
    for i in range(n // 2):
        rows[2 * i] = 1 << (2 * i + 1)
        rows[2 * i + 1] = 1 << (2 * i)
    return Graph(n, tuple(rows))


def make_fan(c: int) -> Graph:
    """F_c: center 0 joined to every vertex of the matching {2i-1, 2i}, 1 <= i <= c."""
    if c < 0:
        raise ArgumentError(f"fan size must be nonnegative, got {c}")
    n = 2 * c + 1
    _check_order(n)
    edges = [(0, v) for v in range(1, n)]
    edges.extend((2 * i - 1, 2 * i) for i in range(1, c + 1))
    return Graph.from_edges(n, edges)


# --- combinators ----------------------------------------------------------


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g ∪ h with the vertices of h shifted up by order(g)."""
    n = g.order + h.order
    _check_order(n)
    shift = g.order
    return Graph(n, g.adj + tuple(row << shift for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """g + h: the disjoint union plus every edge between the two parts."""
    n = g.order + h.order
    _check_order(n)
    shift = g.order
    g_part = (1 << shift) - 1
    h_part = ((1 << h.order) - 1) << shift
    rows = tuple(row | h_part for row in g.adj) + tuple((row << shift) | g_part for row in h.adj)
    return Graph(n, rows)


def induced(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by s, relabelled preserving vertex order."""
    if s & ~g.vertices:
        raise ArgumentError("vertex set reaches beyond the graph order")
    kept = members(s)
    index = {v: i for i, v in enumerate(kept)}
    rows = []
    for v in kept:
        row = 0
        for u in members(g.adj[v] & s):
            row |= 1 << index[u]
        rows.append(row)
    return Graph(len(kept), tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def components(g: Graph) -> List[VertexSet]:
    """Connected components, ordered by their smallest vertex."""
    remaining = g.vertices
    out = []
    while remaining:
        frontier = remaining & -remaining
        comp = 0
        while frontier:
            comp |= frontier
            grown = 0
            for v in members(frontier):
                grown |= g.adj[v]
            frontier = grown & ~comp
        out.append(comp)
        remaining &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


# --- canonical labeling ---------------------------------------------------


@dataclass(frozen=True)
class Labeling:
    """Result of the canonical search.

    ``lab[i]`` is the original vertex placed at canonical position i;
    ``generators`` are automorphisms as image tuples (v -> gen[v]) that
    generate the full automorphism group.
    """

    lab: Tuple[int, ...]
    generators: Tuple[Tuple[int, ...], ...]
    canonical: Graph

    @property
    def label(self) -> bytes:
        return graph6_encode(self.canonical)


def _cell_mask(cell: Sequence[int]) -> int:
    mask = 0
    for v in cell:
        mask |= 1 << v
    return mask


def _refine(adj: Sequence[int], cells: List[List[int]]) -> List[List[int]]:
    """Coarsest equitable refinement; split cells are ordered by neighbour counts."""
    while True:
        masks = [_cell_mask(cell) for cell in cells]
        refined = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups = {}
            for v in cell:
                row = adj[v]
                key = tuple((row & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                refined.append(cell)
                continue
            split = True
            for key in sorted(groups):
                refined.append(groups[key])
        cells = refined
        if not split:
            return cells


class _CanonSearch:
    """Individualise/refine search tree with automorphism pruning.

    The canonical form is the maximal upper-triangle bit string over all
    leaves. A leaf matching the first leaf yields an automorphism and lets the
    search jump back to the first-path node where the two paths diverge.
    """

    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.generators: List[Tuple[int, ...]] = []
        self.first_lab: Optional[List[int]] = None
        self.first_path: List[int] = []
        self.first_form = -1
        self.best_lab: Optional[List[int]] = None
        self.best_form = -1

    def form(self, lab: Sequence[int]) -> int:
        adj = self.adj
        value = 0
        for j in range(1, self.n):
            row = adj[lab[j]]
            for i in range(j):
                value = (value << 1) | ((row >> lab[i]) & 1)
        return value

    def run(self) -> None:
        root = _refine(self.adj, [list(range(self.n))])
        self._descend(root, [])

    def _descend(self, cells: List[List[int]], path: List[int]) -> Optional[int]:
        depth = len(path)
        target_index = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target_index = i
                break
        if target_index < 0:
            return self._leaf([cell[0] for cell in cells], path)

        target = cells[target_index]
        tried: List[int] = []
        for w in target:
            if tried and self._in_orbit(w, tried, path):
                continue
            tried.append(w)
            child = cells[:target_index] + [[w], [x for x in target if x != w]] + cells[target_index + 1:]
            jump = self._descend(_refine(self.adj, child), path + [w])
            if jump is not None and jump < depth:
                return jump
        return None

    def _leaf(self, lab: List[int], path: List[int]) -> Optional[int]:
        value = self.form(lab)
        if self.first_lab is None:
            self.first_lab = self.best_lab = lab
            self.first_path = path
            self.first_form = self.best_form = value
            return None
        if value == self.first_form:
            self._record(self.first_lab, lab)
            common = 0
            for a, b in zip(path, self.first_path):
                if a != b:
                    break
                common += 1
            return common
        if value > self.best_form:
            self.best_form = value
            self.best_lab = lab
        elif value == self.best_form:
            self._record(self.best_lab, lab)
        return None

    def _record(self, source: Sequence[int], image: Sequence[int]) -> None:
        perm = [0] * self.n
        for a, b in zip(source, image):
            perm[a] = b
        if any(perm[v] != v for v in range(self.n)):
            self.generators.append(tuple(perm))

    def _in_orbit(self, w: int, tried: List[int], path: List[int]) -> bool:
        gens = [p for p in self.generators if all(p[v] == v for v in path)]
        if not gens:
            return False
        seen = set(tried)
        stack = list(tried)
        while stack:
            v = stack.pop()
            for p in gens:
                u = p[v]
                if u not in seen:
                    if u == w:
                        return True
                    seen.add(u)
                    stack.append(u)
        return False


def canonical_labeling(g: Graph) -> Labeling:
    """Exact canonical labeling with automorphism group generators."""
    n = g.order
    if n <= 1:
        return Labeling(tuple(range(n)), (), g)
    search = _CanonSearch(g.adj, n)
    search.run()
    lab = search.best_lab
    perm = [0] * n
    for i, v in enumerate(lab):
        perm[v] = i
    return Labeling(tuple(lab), tuple(search.generators), g.permute(perm))


def canonical_label(g: Graph) -> bytes:
    """graph6 of the canonical relabelling; equal iff the graphs are isomorphic."""
    return canonical_labeling(g).label


def orbit_partition(n: int, generators: Iterable[Sequence[int]]) -> List[int]:
    """Orbit representative (smallest member) of every vertex under the generators."""
    parent = list(range(n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for perm in generators:
        for v in range(n):
            a, b = find(v), find(perm[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


# --- graph6 ---------------------------------------------------------------


def _encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([63 + n])
    return bytes([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])


def graph6_encode(g: Graph) -> bytes:
    """graph6 bytes (no header, no newline)."""
    out = bytearray(_encode_order(g.order))
    acc = 0
    nbits = 0
    for j in range(1, g.order):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((row >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = 0
                nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return bytes(out)


def graph6_decode(data: Union[bytes, str]) -> Graph:
    """Parse one graph6 string; an optional ``>>graph6<<`` header and trailing newline are accepted."""
    if isinstance(data, str):
        try:
            data = data.encode("ascii")
        except UnicodeEncodeError as e:
            raise Graph6ParseError("non-ASCII character", e.start) from e
    data = data.rstrip(b"\r\n")
    pos = len(GRAPH6_HEADER) if data.startswith(GRAPH6_HEADER) else 0

    def byte_at(i: int) -> int:
        if i >= len(data):
            raise Graph6ParseError("truncated order header", len(data), data)
        b = data[i]
        if b < 63 or b > 126:
            raise Graph6ParseError(f"byte {b} outside [63, 126]", i, data)
        return b

    first = byte_at(pos)
    if first == 126:
        if byte_at(pos + 1) == 126:
            raise Graph6ParseError("8-byte order header is not supported", pos + 1, data)
        n = 0
        for i in range(pos + 1, pos + 4):
            n = (n << 6) | (byte_at(i) - 63)
        if n <= 62:
            raise Graph6ParseError(f"order {n} must use the one-byte header", pos, data)
        pos += 4
    else:
        n = first - 63
        pos += 1
    if n > MAX_ORDER:
        raise Graph6ParseError(f"order {n} exceeds {MAX_ORDER}", pos - 1, data)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6ParseError(
            f"truncated bit section: expected {nbytes} bytes, found {len(body)}", len(data), data
        )
    if len(body) > nbytes:
        raise Graph6ParseError("unexpected trailing bytes", pos + nbytes, data)
    for i in range(nbytes):
        byte_at(pos + i)
    pad = 6 * nbytes - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6ParseError("nonzero padding bits", pos + nbytes - 1, data)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            chunk = body[k // 6] - 63
            if (chunk >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_stream(lines: Iterable[Union[bytes, str]]) -> Iterator[Graph]:
    """Decode a newline-delimited graph6 stream, skipping blank lines."""
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)


def format_graph6_stream(graphs: Iterable[Graph]) -> Iterator[str]:
    for g in graphs:
        yield graph6_encode(g).decode("ascii") + "\n"
