"""Core graph type, edge-list parsing, cuts, and exact Cheeger constants.

Graphs are simple and undirected, on vertices 0..n-1, with edges stored in
canonical order (u < v, sorted lexicographically).  Edge index j in that
canonical order is the index used everywhere else in the package, notably by
orientation bitmasks.

Cut quantities are exact: ratios are ``fractions.Fraction`` and the global
Cheeger constant is found by exhaustive subset scan (n <= 24), halved by the
X ~ complement(X) symmetry so only subsets containing vertex 0 are visited.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError, SizeLimitError

CHEEGER_MAX_N = 24
SUBSET_MAX_N = 24


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "deg", "_edge_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise DomainError("graph needs at least one vertex")
        canon = []
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u} not allowed")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise DomainError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
            canon.append(e)
        canon.sort()
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self.deg: tuple[int, ...] = tuple(len(a) for a in self.adj)
        self._edge_index = {e: j for j, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_index(self, u: int, v: int) -> int:
        """Canonical index of edge {u, v}."""
        e = (u, v) if u < v else (v, u)
        return self._edge_index[e]

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u < v else (v, u)
        return e in self._edge_index

    def adjacency_masks(self) -> list[int]:
        """Neighborhood bitmasks (only meaningful for n <= 62 or so)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return masks

    def min_degree(self) -> int:
        return min(self.deg)

    def max_degree(self) -> int:
        return max(self.deg)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class VertexSubset:
    """Subset of the vertices of an n-vertex graph, stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("subset universe must have at least one vertex")
        if not 0 <= self.mask < (1 << self.n):
            raise DomainError("subset mask out of range for its universe")

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> "VertexSubset":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise DomainError(f"vertex {v} out of range for n={n}")
            mask |= 1 << v
        return cls(n, mask)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if (self.mask >> v) & 1)

    def complement(self) -> "VertexSubset":
        return VertexSubset(self.n, ((1 << self.n) - 1) ^ self.mask)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool((self.mask >> v) & 1)


@dataclass(frozen=True)
class CheegerReport:
    """Exact Cheeger constant together with a witnessing minimizer."""

    n: int
    m: int
    phi: Fraction
    argmin: VertexSubset
    cut_edges: int
    vol_x: int
    vol_xbar: int

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "phi_num": self.phi.numerator,
            "phi_den": self.phi.denominator,
            "phi": float(self.phi),
            "argmin_bitmask": self.argmin.mask,
            "argmin_members": list(self.argmin.members),
            "cut_edges": self.cut_edges,
            "vol_x": self.vol_x,
            "vol_xbar": self.vol_xbar,
        }


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: a header line ``n m`` then m lines ``u v``.

    Blank lines and lines starting with ``#`` are skipped.  Errors carry the
    offending 1-based line number.
    """
    header = None
    edges: list[tuple[int, int]] = []
    m_expected = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: header must be 'n m'")
            try:
                n, m_expected = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: header must be two integers")
            if n < 1 or m_expected < 0:
                raise ParseError(f"line {lineno}: header values out of range")
            header = (n, m_expected)
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: edge endpoints must be integers")
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: endpoint out of range [0,{n})")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in set(edges):
            raise ParseError(f"line {lineno}: duplicate edge ({e[0]},{e[1]})")
        edges.append(e)
    if header is None:
        raise ParseError("line 1: empty input, expected 'n m' header")
    if len(edges) != m_expected:
        raise ParseError(
            f"edge count mismatch: header says {m_expected}, found {len(edges)}"
        )
    return Graph(header[0], edges)


def format_graph(g: Graph) -> str:
    """Serialize a graph back to the edge-list format (canonical edge order)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def graph_sha256(g: Graph) -> str:
    """Content hash of the canonical edge-list serialization."""
    return hashlib.sha256(format_graph(g).encode()).hexdigest()


def as_subset(g: Graph, x) -> VertexSubset:
    """Coerce a VertexSubset or an iterable of vertices to a VertexSubset."""
    if isinstance(x, VertexSubset):
        if x.n != g.n:
            raise DomainError("subset universe size does not match graph")
        return x
    return VertexSubset.from_members(g.n, x)


def volume(g: Graph, x) -> int:
    """Sum of degrees over the subset."""
    s = as_subset(g, x)
    return sum(g.deg[v] for v in s.members)


def edge_boundary(g: Graph, x) -> int:
    """Number of edges with exactly one endpoint in the subset."""
    s = as_subset(g, x)
    mask = s.mask
    return sum(1 for u, v in g.edges if ((mask >> u) & 1) != ((mask >> v) & 1))


def boundary_edge_list(g: Graph, x) -> list[tuple[int, int]]:
    """The crossing edges themselves, in canonical order."""
    s = as_subset(g, x)
    mask = s.mask
    return [(u, v) for u, v in g.edges if ((mask >> u) & 1) != ((mask >> v) & 1)]


def cheeger_ratio(g: Graph, x) -> Fraction:
    """Exact cut ratio e(X, X-bar) / min(vol X, vol X-bar)."""
    s = as_subset(g, x)
    if s.mask == 0 or s.mask == (1 << g.n) - 1:
        raise DomainError("cut ratio needs a nonempty proper subset")
    vol_x = volume(g, s)
    vol_xbar = 2 * g.m - vol_x
    denom = min(vol_x, vol_xbar)
    if denom == 0:
        raise DomainError("cut ratio undefined: one side has volume zero")
    return Fraction(edge_boundary(g, s), denom)


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex lists of the connected components, each sorted, in first-seen order."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def bridges(g: Graph) -> list[tuple[int, int]]:
    """All cut edges, found by one iterative lowlink DFS."""
    disc = [-1] * g.n
    low = [0] * g.n
    out: list[tuple[int, int]] = []
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        # stack entries: (vertex, parent edge index, iterator position)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, pedge, i = stack.pop()
            if i < len(g.adj[v]):
                stack.append((v, pedge, i + 1))
                w = g.adj[v][i]
                eidx = g.edge_index(v, w)
                if eidx == pedge:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eidx, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                if pedge != -1:
                    u, w = g.edges[pedge]
                    parent = u if disc[u] < disc[v] else w
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.append(g.edges[pedge])
    return sorted(out)


def is_two_edge_connected(g: Graph) -> bool:
    """Connected with no cut edge (single vertex counts as True)."""
    if g.n == 1:
        return True
    return is_connected(g) and not bridges(g)


def cheeger_constant_exact(g: Graph) -> CheegerReport:
    """Exact Cheeger constant by exhaustive subset scan.

    Only subsets containing vertex 0 are visited (complement symmetry); ties
    are broken toward the smallest bitmask.  Guards: connected, 2 <= n <= 24.
    """
    if g.n < 2:
        raise DomainError("Cheeger constant needs at least two vertices")
    if g.n > CHEEGER_MAX_N:
        raise SizeLimitError(f"n exceeds exact-Cheeger guard ({CHEEGER_MAX_N})")
    if not is_connected(g):
        raise DomainError(
            "Cheeger constant of a disconnected graph is 0 with an empty cut; "
            "pass a connected graph"
        )
    from .kernels import cheeger_scan

    cut, minvol, mask = cheeger_scan(g)
    x = VertexSubset(g.n, mask)
    vol_x = volume(g, x)
    return CheegerReport(
        n=g.n,
        m=g.m,
        phi=Fraction(cut, minvol),
        argmin=x,
        cut_edges=cut,
        vol_x=vol_x,
        vol_xbar=2 * g.m - vol_x,
    )


def connected_k_subsets(g: Graph, k: int) -> list[VertexSubset]:
    """All size-k subsets inducing a connected subgraph, ascending bitmask order.

    Guards: 1 <= k <= n and n <= 24.
    """
    if g.n > SUBSET_MAX_N:
        raise SizeLimitError(
            f"connected-subset scan limited to n <= {SUBSET_MAX_N}, got n={g.n}"
        )
    if not 1 <= k <= g.n:
        raise DomainError(f"k must be in [1,{g.n}], got {k}")
    from .kernels import connected_subsets

    masks = connected_subsets(g, k)
    return [VertexSubset(g.n, int(mask)) for mask in masks]


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph with vertices relabeled 0..len-1 in the given order."""
    idx = {v: i for i, v in enumerate(vertices)}
    edges = [
        (idx[u], idx[v]) for u, v in g.edges if u in idx and v in idx
    ]
    return Graph(len(vertices), edges)


def iter_nonempty_proper_subsets(n: int) -> Iterator[int]:
    """All masks 0 < mask < 2^n - 1 (for exhaustive small-n checks)."""
    full = (1 << n) - 1
    for mask in range(1, full):
        yield mask
