"""Graph parsing, validation, and degree computations.

Four input variants are supported: plain undirected graphs, edge-weighted
undirected graphs, directed graphs, and two-sided (bipartite) graphs. The
edge-list text format is whitespace-separated lines ``i j [w]`` with
'#'-prefixed comment lines; two headers are recognized::

    # n: <count>                  explicit vertex count
    # bipartite-left: i1 i2 ...   side labels for the bipartite variant

Blank lines are ignored. Graphs are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "VARIANTS",
    "GraphFormatError",
    "Graph",
    "parse_edge_list",
    "render_edge_list",
    "degrees",
]

VARIANTS = ("undirected", "weighted", "directed", "bipartite")

# Variants whose edges are unordered pairs stored once.
_UNDIRECTED_LIKE = ("undirected", "weighted", "bipartite")


class GraphFormatError(ValueError):
    """Raised for malformed edge-list text or invariant violations."""


@dataclass(frozen=True)
class Graph:
    """Validated graph: ``n`` vertices, edges as (i, j, w) triples.

    For the bipartite variant ``part`` labels each vertex "left" or
    "right" and every edge must join the two sides. Unweighted variants
    carry w = 1.0 on every edge.
    """

    n: int
    edges: tuple[tuple[int, int, float], ...]
    variant: str
    part: tuple[str, ...] | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(i), int(j), float(w)) for i, j, w in self.edges)
        )
        if self.part is not None:
            object.__setattr__(self, "part", tuple(self.part))
        if self.variant not in VARIANTS:
            raise GraphFormatError(f"unknown variant {self.variant!r}")
        if self.n < 1:
            raise GraphFormatError("vertex count must be positive")
        if len(self.edges) == 0:
            raise GraphFormatError("graph must contain at least one edge")
        if self.variant == "bipartite":
            if self.part is None or len(self.part) != self.n:
                raise GraphFormatError(
                    "bipartite graphs need a side label for every vertex"
                )
            if not set(self.part) <= {"left", "right"}:
                raise GraphFormatError("side labels must be 'left' or 'right'")
        elif self.part is not None:
            raise GraphFormatError("side labels are only valid for bipartite graphs")

        seen = set()
        for i, j, w in self.edges:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphFormatError(f"edge ({i}, {j}) out of range for n={self.n}")
            if i == j:
                raise GraphFormatError(f"self-loop at vertex {i} is not allowed")
            if w <= 0:
                raise GraphFormatError(f"edge ({i}, {j}) has non-positive weight {w}")
            if self.variant != "weighted" and w != 1.0:
                raise GraphFormatError(
                    f"edge ({i}, {j}) carries weight {w}; only the weighted "
                    "variant admits weights other than 1"
                )
            key = (i, j) if self.variant == "directed" else (min(i, j), max(i, j))
            if key in seen:
                raise GraphFormatError(f"duplicate edge ({i}, {j})")
            seen.add(key)
            if self.variant == "bipartite" and self.part[i] == self.part[j]:
                raise GraphFormatError(
                    f"edge ({i}, {j}) joins two {self.part[i]} vertices"
                )

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> float:
        """Sum of edge weights (equals m for unweighted variants)."""
        return float(sum(w for _, _, w in self.edges))


def _parse_headers(lines):
    n_header = None
    left_header = None
    for lineno, raw in lines:
        body = raw[1:].strip()
        if body.startswith("n:"):
            try:
                n_header = int(body[2:].strip())
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count header")
        elif body.startswith("bipartite-left:"):
            try:
                left_header = {int(t) for t in body.split(":", 1)[1].split()}
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad bipartite-left header")
    return n_header, left_header


def parse_edge_list(text: str, variant: str = "undirected") -> Graph:
    """Parse edge-list text into a validated :class:`Graph`.

    Rejects self-loops, duplicate edges, non-positive weights, edges within
    one side of a bipartite graph, and empty edge sets, reporting the
    offending line number where one exists.
    """
    if variant not in VARIANTS:
        raise GraphFormatError(f"unknown variant {variant!r}")

    header_lines = []
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            header_lines.append((lineno, line))
            continue
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise GraphFormatError(f"line {lineno}: expected 'i j [w]'")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: vertex ids must be integers")
        if i < 0 or j < 0:
            raise GraphFormatError(f"line {lineno}: vertex ids must be non-negative")
        if i == j:
            raise GraphFormatError(f"line {lineno}: self-loop at vertex {i}")
        w = 1.0
        if len(tokens) == 3:
            try:
                w = float(tokens[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad weight {tokens[2]!r}")
            if w <= 0:
                raise GraphFormatError(f"line {lineno}: non-positive weight {w}")
        data.append((lineno, i, j, w))

    if not data:
        raise GraphFormatError("no edges: modularity needs m >= 1")

    n_header, left_header = _parse_headers(header_lines)
    max_index = max(max(i, j) for _, i, j, _ in data)
    n = n_header if n_header is not None else max_index + 1
    if n <= max_index:
        raise GraphFormatError(
            f"vertex count header n={n} is inconsistent with edge index {max_index}"
        )

    part = None
    if variant == "bipartite":
        if left_header is None:
            raise GraphFormatError(
                "bipartite input needs a '# bipartite-left: ...' header"
            )
        if not all(0 <= v < n for v in left_header):
            raise GraphFormatError("bipartite-left header lists an out-of-range vertex")
        part = tuple("left" if v in left_header else "right" for v in range(n))

    seen = {}
    for lineno, i, j, w in data:
        key = (i, j) if variant == "directed" else (min(i, j), max(i, j))
        if key in seen:
            raise GraphFormatError(
                f"line {lineno}: duplicate edge ({i}, {j}), first seen on "
                f"line {seen[key]}"
            )
        seen[key] = lineno
        if variant == "bipartite" and part[i] == part[j]:
            raise GraphFormatError(
                f"line {lineno}: edge ({i}, {j}) joins two {part[i]} vertices"
            )
        if variant != "weighted" and w != 1.0:
            raise GraphFormatError(
                f"line {lineno}: weight {w} is not allowed for the {variant} variant"
            )

    edges = tuple((i, j, w) for _, i, j, w in data)
    return Graph(n=n, edges=edges, variant=variant, part=part)


def render_edge_list(g: Graph) -> str:
    """Inverse of :func:`parse_edge_list`: parse(render(g)) reproduces g."""
    lines = [f"# n: {g.n}"]
    if g.variant == "bipartite":
        left = " ".join(str(v) for v in range(g.n) if g.part[v] == "left")
        lines.append(f"# bipartite-left: {left}")
    for i, j, w in g.edges:
        if g.variant == "weighted":
            lines.append(f"{i} {j} {w!r}")
        else:
            lines.append(f"{i} {j}")
    return "\n".join(lines) + "\n"


def degrees(g: Graph):
    """Degree vector of ``g``.

    Undirected/bipartite: incident edge counts. Weighted: incident weight
    sums. Directed: a (d_out, d_in) pair of vectors.
    """
    if g.variant == "directed":
        d_out = np.zeros(g.n)
        d_in = np.zeros(g.n)
        for i, j, _ in g.edges:
            d_out[i] += 1.0
            d_in[j] += 1.0
        return d_out, d_in
    d = np.zeros(g.n)
    for i, j, w in g.edges:
        d[i] += w
        d[j] += w
    return d
