"""Simple undirected graphs as dense 0/1 adjacency matrices.

Everything downstream (color refinement, spectra, walk counting) operates on
the `Graph` type defined here. Graphs are immutable after construction and
all operations are pure, so values can be shared freely across threads.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np


class GraphError(ValueError):
    """Base class for graph construction and I/O errors."""


class SelfLoopError(GraphError):
    def __init__(self, u: int):
        super().__init__(f"self-loop on node {u}")
        self.node = u


class DuplicateEdgeError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.edge = (u, v)


class EdgeIndexError(GraphError):
    def __init__(self, u: int, n: int):
        super().__init__(f"node index {u} out of range for n={n}")


class SizeMismatchError(GraphError):
    pass


class TooLargeError(GraphError):
    """Input exceeds a combinatorial-search bound."""


class ParseError(GraphError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple undirected graph: symmetric {0,1} adjacency with zero diagonal.

    The adjacency array is stored as float64 (so it can feed linear algebra
    directly) but every entry is exactly 0.0 or 1.0. The array is marked
    read-only; build modified graphs through the constructors instead.
    """

    n: int
    adjacency: np.ndarray
    name: str | None = None

    def __post_init__(self):
        a = np.asarray(self.adjacency, dtype=np.float64)
        if a.shape != (self.n, self.n):
            raise GraphError(f"adjacency shape {a.shape} does not match n={self.n}")
        if not np.all((a == 0.0) | (a == 1.0)):
            raise GraphError("adjacency entries must be exactly 0 or 1")
        if np.any(np.diag(a) != 0.0):
            raise SelfLoopError(int(np.flatnonzero(np.diag(a))[0]))
        if not np.array_equal(a, a.T):
            raise GraphError("adjacency must be symmetric")
        a = a.copy()
        a.flags.writeable = False
        object.__setattr__(self, "adjacency", a)

    def __eq__(self, other) -> bool:
        # name is a label, not part of graph identity
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and np.array_equal(self.adjacency, other.adjacency)
        )

    def __hash__(self):
        return hash((self.n, self.adjacency.tobytes()))

    @property
    def degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def num_edges(self) -> int:
        return int(self.adjacency.sum()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Undirected edge list with u < v, sorted."""
        us, vs = np.nonzero(np.triu(self.adjacency))
        return list(zip(us.tolist(), vs.tolist()))

    def neighbors(self, v: int) -> np.ndarray:
        return np.flatnonzero(self.adjacency[v])


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0..n-1}, stored as the image array: i -> mapping[i]."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(i) for i in self.mapping)
        if sorted(m) != list(range(len(m))):
            raise GraphError("mapping is not a bijection on {0..n-1}")
        object.__setattr__(self, "mapping", m)

    def __len__(self) -> int:
        return len(self.mapping)

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(tuple(range(n)))

    @staticmethod
    def random(n: int, rng: np.random.Generator) -> "Permutation":
        return Permutation(tuple(rng.permutation(n).tolist()))

    def compose(self, inner: "Permutation") -> "Permutation":
        """self ∘ inner: i -> self(inner(i))."""
        if len(self) != len(inner):
            raise SizeMismatchError("cannot compose permutations of different length")
        return Permutation(tuple(self.mapping[j] for j in inner.mapping))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return Permutation(tuple(inv))


@dataclass(frozen=True)
class GraphCorpusEntry:
    key: str
    graph: Graph
    provenance: str


def from_edge_list(n: int, edges, name: str | None = None) -> Graph:
    """Build a graph from undirected edge pairs.

    Raises SelfLoopError, DuplicateEdgeError, or EdgeIndexError on bad input.
    """
    if n <= 0:
        raise GraphError(f"node count must be positive, got {n}")
    a = np.zeros((n, n))
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v:
            raise SelfLoopError(u)
        for w in (u, v):
            if not 0 <= w < n:
                raise EdgeIndexError(w, n)
        if a[u, v] != 0.0:
            raise DuplicateEdgeError(u, v)
        a[u, v] = a[v, u] = 1.0
    return Graph(n, a, name)


def apply_permutation(g: Graph, p: Permutation) -> Graph:
    """Relabel nodes: result B satisfies B[p(i), p(j)] = A[i, j]."""
    if len(p) != g.n:
        raise SizeMismatchError(f"permutation length {len(p)} != n={g.n}")
    q = np.asarray(p.mapping)
    b = np.empty_like(g.adjacency)
    b[np.ix_(q, q)] = g.adjacency
    return Graph(g.n, b, g.name)


def is_isomorphic_bruteforce(g1: Graph, g2: Graph, max_n: int = 10) -> bool:
    """Exhaustive isomorphism test, usable as a ground-truth oracle.

    Searches all node bijections (with degree pruning and incremental
    consistency checks, which do not change the answer). Capped at
    n <= max_n because the search is factorial.
    """
    if g1.n != g2.n:
        raise SizeMismatchError(f"graphs have different sizes ({g1.n} vs {g2.n})")
    if g1.n > max_n:
        raise TooLargeError(f"n={g1.n} exceeds brute-force bound {max_n}")
    n = g1.n
    d1, d2 = g1.degrees, g2.degrees
    if sorted(d1.tolist()) != sorted(d2.tolist()):
        return False
    a1, a2 = g1.adjacency, g2.adjacency

    # backtracking over images of nodes 0..n-1 of g1
    image = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        for v in range(n):
            if used[v] or d1[i] != d2[v]:
                continue
            if all(a1[i, j] == a2[v, image[j]] for j in range(i)):
                image[i] = v
                used[v] = True
                if extend(i + 1):
                    return True
                used[v] = False
        image[i] = -1
        return False

    return extend(0)


# Built-in example graphs. Node letters A..J map alphabetically to 0..9.
_PRISM_EDGES = [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (0, 4), (1, 5)]
_BIHEXAGON_EDGES = [(4, 2), (2, 0), (0, 1), (1, 3), (3, 5), (5, 4),
                    (4, 6), (6, 8), (8, 9), (9, 7), (7, 5)]
_BIPENTAGON_EDGES = [(4, 2), (2, 0), (0, 1), (1, 3), (3, 4),
                     (5, 4), (5, 7), (7, 9), (9, 8), (8, 6), (6, 5)]


def corpus() -> list[GraphCorpusEntry]:
    """The built-in example graphs used throughout the test suite and demos.

    prism/k33 are 3-regular cospectral-in-degree twins that color refinement
    cannot separate; bihexagon/bipentagon are the 10-node analogue (two fused
    hexagons vs two bridged pentagons).
    """
    k33_edges = [(u, v) for u in (0, 2, 4) for v in (1, 3, 5)]
    return [
        GraphCorpusEntry(
            "prism",
            from_edge_list(6, _PRISM_EDGES, name="prism"),
            "triangular prism (K3 x K2), 3-regular on 6 nodes",
        ),
        GraphCorpusEntry(
            "k33",
            from_edge_list(6, k33_edges, name="k33"),
            "complete bipartite K3,3 on parts {0,2,4} / {1,3,5}",
        ),
        GraphCorpusEntry(
            "bihexagon",
            from_edge_list(10, _BIHEXAGON_EDGES, name="bihexagon"),
            "two hexagons sharing the edge (4,5)",
        ),
        GraphCorpusEntry(
            "bipentagon",
            from_edge_list(10, _BIPENTAGON_EDGES, name="bipentagon"),
            "two pentagons joined by the bridge edge (4,5)",
        ),
    ]


def corpus_graph(key: str) -> Graph:
    for entry in corpus():
        if entry.key == key:
            return entry.graph
    raise KeyError(f"no corpus graph named {key!r}")


def erdos_renyi(n: int, p: float, rng: np.random.Generator, name: str | None = None) -> Graph:
    """G(n, p) sample; handy for randomized cross-checks."""
    upper = rng.random((n, n)) < p
    a = np.triu(upper, k=1)
    a = (a | a.T).astype(np.float64)
    return Graph(n, a, name)


def save_graph(g: Graph, path) -> None:
    """Write the edge-list text format (see load_graph)."""
    lines = []
    if g.name:
        lines.append(f"# {g.name}")
    lines.append(str(g.n))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    with open(path, "w", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def load_graph(path) -> Graph:
    """Read the edge-list text format.

    Format: '#' lines are comments; the first non-comment line is N; each
    following non-comment line is "u v" with 0 <= u < v < N. Duplicate and
    self-loop lines are errors, reported with their line number.
    """
    n = None
    a = None
    with open(path) as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            toks = line.split()
            try:
                vals = [int(t) for t in toks]
            except ValueError:
                raise ParseError(line_no, f"non-integer token in {line!r}") from None
            if n is None:
                if len(vals) != 1 or vals[0] <= 0:
                    raise ParseError(line_no, f"expected positive node count, got {line!r}")
                n = vals[0]
                a = np.zeros((n, n))
                continue
            if len(vals) != 2:
                raise ParseError(line_no, f"expected 'u v', got {line!r}")
            u, v = vals
            if u == v:
                raise ParseError(line_no, f"self-loop on node {u}")
            if not (0 <= u < v < n):
                raise ParseError(line_no, f"edge ({u}, {v}) violates 0 <= u < v < {n}")
            if a[u, v] != 0.0:
                raise ParseError(line_no, f"duplicate edge ({u}, {v})")
            a[u, v] = a[v, u] = 1.0
    if n is None:
        raise ParseError(0, "empty file: missing node count")
    stem = os.path.splitext(os.path.basename(str(path)))[0]
    return Graph(n, a, name=stem)
