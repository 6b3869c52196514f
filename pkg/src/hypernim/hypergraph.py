"""Hypergraphs on a small vertex set, as bitset edge families.

Vertices are 0-based contiguous integers 0..n-1 with n <= 64, so every
vertex set fits in one machine word and subset/intersection/cardinality
queries are single int operations.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

MAX_VERTICES = 64


class VertexSet:
    """Immutable set of vertex indices, backed by an int bitmask."""

    __slots__ = ("mask",)

    def __init__(self, vertices: Iterable[int] = ()):
        mask = 0
        for v in vertices:
            if v < 0:
                raise ValueError(f"negative vertex index {v}")
            mask |= 1 << v
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_mask(cls, mask: int) -> "VertexSet":
        if mask < 0:
            raise ValueError("mask must be nonnegative")
        vs = cls.__new__(cls)
        object.__setattr__(vs, "mask", mask)
        return vs

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    def __contains__(self, v: int) -> bool:
        return v >= 0 and (self.mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __eq__(self, other) -> bool:
        return isinstance(other, VertexSet) and self.mask == other.mask

    def __hash__(self) -> int:
        return hash(self.mask)

    def __le__(self, other: "VertexSet") -> bool:
        """Subset test."""
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "VertexSet") -> bool:
        return self.mask != other.mask and self <= other

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & other.mask)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask | other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet.from_mask(self.mask & ~other.mask)

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.mask & other.mask == 0

    def vertices(self) -> tuple[int, ...]:
        return tuple(self)

    def __repr__(self) -> str:
        return f"VertexSet({{{', '.join(map(str, self))}}})"


def full_set(n: int) -> VertexSet:
    """The set {0, ..., n-1}."""
    return VertexSet.from_mask((1 << n) - 1)


def _edge_key(vs: VertexSet) -> tuple[int, ...]:
    return vs.vertices()


class Hypergraph:
    """A deduplicated family of nonempty hyperedges over vertices 0..n-1.

    Edges are kept in a canonical order (lexicographic by sorted vertex
    tuple), so two hypergraphs are equal exactly when their edge lists are.
    Instances are immutable and hashable.

    Generators in :mod:`hypernim.families` additionally guarantee that the
    edges cover every vertex; induced subhypergraphs may leave vertices
    uncovered, so coverage is a predicate (``covers_all_vertices``) rather
    than a constructor invariant.
    """

    __slots__ = ("n", "edges", "_edge_masks", "_edge_mask_set")

    def __init__(self, n: int, edges: Iterable[Iterable[int]]):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        seen = set()
        canon = []
        for e in edges:
            vs = e if isinstance(e, VertexSet) else VertexSet(e)
            if not vs:
                raise ValueError("hyperedges must be nonempty")
            if vs.mask >> n:
                raise ValueError(f"edge {vs!r} has a vertex outside 0..{n - 1}")
            if vs.mask not in seen:
                seen.add(vs.mask)
                canon.append(vs)
        if not canon:
            raise ValueError("a hypergraph must have at least one edge")
        canon.sort(key=_edge_key)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "_edge_masks", tuple(vs.mask for vs in canon))
        object.__setattr__(self, "_edge_mask_set", frozenset(vs.mask for vs in canon))

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Hypergraph)
            and self.n == other.n
            and self._edge_masks == other._edge_masks
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edge_masks))

    def __len__(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        shown = ", ".join("{" + ",".join(map(str, e)) + "}" for e in self.edges[:6])
        more = "" if len(self.edges) <= 6 else f", ... ({len(self.edges)} edges)"
        return f"Hypergraph(n={self.n}, [{shown}{more}])"

    def __reduce__(self):
        return (Hypergraph, (self.n, [e.vertices() for e in self.edges]))

    @property
    def vertex_set(self) -> VertexSet:
        return full_set(self.n)

    def edge_masks(self) -> tuple[int, ...]:
        return self._edge_masks

    def has_edge(self, vs: VertexSet) -> bool:
        return vs.mask in self._edge_mask_set

    def support_mask(self) -> int:
        m = 0
        for em in self._edge_masks:
            m |= em
        return m

    def covers_all_vertices(self) -> bool:
        return self.support_mask() == (1 << self.n) - 1


def induced_subhypergraph(h: Hypergraph, s: VertexSet) -> Optional[Hypergraph]:
    """Edges of ``h`` contained in ``s``, or None when no edge survives.

    Vertex labels are kept; the result lives on the same 0..n-1 universe.
    """
    if s.mask >> h.n:
        raise ValueError("s must be a subset of the vertex universe")
    surviving = [e for e in h.edges if e.mask & ~s.mask == 0]
    if not surviving:
        return None
    return Hypergraph(h.n, surviving)


def is_transversal(h: Hypergraph, t: VertexSet) -> bool:
    """True iff ``t`` intersects every edge of ``h``."""
    tm = t.mask
    return all(tm & em for em in h._edge_masks)


def _transversal_edge_mask(edge_masks) -> Optional[int]:
    """Some edge mask that meets every edge, or None."""
    for tm in edge_masks:
        if all(tm & em for em in edge_masks):
            return tm
    return None


def is_transversal_free(h: Hypergraph) -> bool:
    """True iff no edge of ``h`` is a transversal of ``h``."""
    return _transversal_edge_mask(h._edge_masks) is None


def minimal_transversal_free_witness(h: Hypergraph):
    """None when ``h`` is minimal transversal-free, else a failure witness.

    The witness is ``("transversal_edge", VertexSet)`` when some edge meets
    all others, or ``("transversal_free_subset", VertexSet)`` naming a proper
    vertex subset whose nonempty induced subhypergraph is still
    transversal-free.
    """
    tm = _transversal_edge_mask(h._edge_masks)
    if tm is not None:
        return ("transversal_edge", VertexSet.from_mask(tm))
    masks = h._edge_masks
    if len(masks) > 48:
        return _minimal_tf_witness_bulk(h)
    full = (1 << h.n) - 1
    for s in range(full):
        sub = [em for em in masks if em & ~s == 0]
        if sub and _transversal_edge_mask(sub) is None:
            return ("transversal_free_subset", VertexSet.from_mask(s))
    return None


def _minimal_tf_witness_bulk(h: Hypergraph):
    # numpy path for large edge families (e.g. thousands of 7-sets on 15
    # vertices); same scan as the pure-int loop above.
    import numpy as np

    masks = np.array(h._edge_masks, dtype=np.uint64)
    full = (1 << h.n) - 1
    for s in range(full):
        sub = masks[(masks & ~np.uint64(s)) == 0]
        if sub.size == 0:
            continue
        for tm in sub:
            if bool(np.all(sub & tm)):
                break
        else:
            return ("transversal_free_subset", VertexSet.from_mask(s))
    return None


def is_minimal_transversal_free(h: Hypergraph) -> bool:
    """Transversal-free, and no proper induced subhypergraph is."""
    return minimal_transversal_free_witness(h) is None


def is_connected(h: Hypergraph) -> bool:
    """True iff no split of 0..n-1 separates the edges.

    A vertex not covered by any edge forms a part of its own, so a
    non-covering hypergraph is never connected.
    """
    parent = list(range(h.n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in h.edges:
        verts = e.vertices()
        r = find(verts[0])
        for v in verts[1:]:
            rv = find(v)
            if rv != r:
                parent[rv] = r
    return len({find(v) for v in range(h.n)}) == 1


def uniformity(h: Hypergraph) -> Optional[int]:
    """The common edge size, or None if sizes differ."""
    k = len(h.edges[0])
    return k if all(len(e) == k for e in h.edges[1:]) else None


# --- text format -------------------------------------------------------
#
#   # comment
#   n 4
#   e 0 1
#   e 2 3


class FormatError(ValueError):
    """Malformed hypergraph/graph text; carries a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"n {h.n}"]
    lines.extend("e " + " ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    n = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if n is not None:
                raise FormatError(line_no, "duplicate 'n' line")
            if len(parts) != 2 or not parts[1].isdigit():
                raise FormatError(line_no, "expected 'n <count>'")
            n = int(parts[1])
        elif parts[0] == "e":
            if n is None:
                raise FormatError(line_no, "'e' line before 'n' line")
            try:
                verts = [int(p) for p in parts[1:]]
            except ValueError:
                raise FormatError(line_no, "edge vertices must be integers") from None
            if not verts:
                raise FormatError(line_no, "empty edge")
            if any(v < 0 or v >= n for v in verts):
                raise FormatError(line_no, f"vertex out of range 0..{n - 1}")
            edges.append(verts)
        else:
            raise FormatError(line_no, f"unknown directive {parts[0]!r}")
    if n is None:
        raise FormatError(1, "missing 'n' line")
    if not edges:
        raise FormatError(1, "no edges")
    return Hypergraph(n, edges)


def load_hypergraph(path) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as f:
        return parse_hypergraph(f.read())


def save_hypergraph(h: Hypergraph, path) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_hypergraph(h))
