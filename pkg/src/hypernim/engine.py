"""Game mechanics of hypergraph NIM.

A move picks a hyperedge and strictly decreases every pile on it, by any
positive amounts; the player who cannot move loses.  This module provides
move enumeration, the height function (longest possible play), and the
memoized brute-force Sprague-Grundy oracle.

Height is computed with the slow-move recursion (decrement each pile of
the chosen edge by exactly one): any longest play can be rearranged into
slow moves, so the restriction is lossless.  Sprague-Grundy values need
the full move set and are computed by mex over all successors.

The memo caches are write-once maps from position tuples to values; they
may be shared between workers or kept per worker, with identical results.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .hypergraph import Hypergraph, VertexSet

Position = tuple[int, ...]

DEFAULT_MAX_PILE = 64
DEFAULT_MAX_MEMO = 100_000_000


class ResourceCapError(RuntimeError):
    """An exhaustive computation hit a configured cap; names the cap."""

    def __init__(self, cap_name: str, detail: str):
        super().__init__(f"resource cap {cap_name} exceeded: {detail}")
        self.cap_name = cap_name


def mex(values: Iterable[int]) -> int:
    """Smallest nonnegative integer not in ``values``."""
    s = values if isinstance(values, (set, frozenset)) else set(values)
    i = 0
    while i in s:
        i += 1
    return i


@dataclass(frozen=True)
class Move:
    """One legal move: an edge index plus the new value of each edge pile."""

    edge_index: int
    new_values: tuple[tuple[int, int], ...]  # (vertex, new pile size), ascending

    def apply(self, x: Position) -> Position:
        out = list(x)
        for v, nv in self.new_values:
            out[v] = nv
        return tuple(out)


@dataclass(frozen=True)
class HeightCertificate:
    """Edge multiplicities realizing a longest play: sum equals the height."""

    multiplicities: tuple[tuple[int, int], ...]  # (edge_index, count)

    def total(self) -> int:
        return sum(c for _, c in self.multiplicities)


def apply_slow_move(x: Position, edge: VertexSet) -> Position:
    """Decrement every pile of ``edge`` by one."""
    out = list(x)
    for v in edge:
        if out[v] < 1:
            raise ValueError(f"edge {edge!r} is not playable at {x}: pile {v} is empty")
        out[v] -= 1
    return tuple(out)


class Engine:
    """Memoized height / Sprague-Grundy evaluator for one hypergraph."""

    def __init__(
        self,
        h: Hypergraph,
        *,
        max_pile: int = DEFAULT_MAX_PILE,
        max_memo: int = DEFAULT_MAX_MEMO,
    ):
        if max_pile < 1 or max_memo < 1:
            raise ValueError("resource caps must be positive")
        self.hypergraph = h
        self.max_pile = max_pile
        self.max_memo = max_memo
        self._edge_verts = tuple(e.vertices() for e in h.edges)
        self._height_memo: dict[Position, int] = {}
        self._sg_memo: dict[Position, int] = {}

    # -- basic move machinery ------------------------------------------

    def _check_position(self, x: Position) -> Position:
        x = tuple(x)
        if len(x) != self.hypergraph.n:
            raise ValueError(
                f"position has {len(x)} piles, hypergraph has {self.hypergraph.n}"
            )
        if any(v < 0 for v in x):
            raise ValueError(f"negative pile in position {x}")
        if any(v > self.max_pile for v in x):
            raise ResourceCapError("max_pile", f"pile exceeds {self.max_pile} in {x}")
        return x

    def playable_edges(self, x: Position) -> list[int]:
        """Indices of edges whose piles are all nonempty at ``x``."""
        out = []
        for idx, verts in enumerate(self._edge_verts):
            for v in verts:
                if x[v] == 0:
                    break
            else:
                out.append(idx)
        return out

    def enumerate_moves(self, x: Position) -> Iterator[tuple[Move, Position]]:
        """Every legal successor exactly once.

        Order is pinned for reproducibility: edges in canonical order, and
        per-vertex new values descending from x_i - 1 to 0 (odometer over
        the edge's vertices in ascending index order).
        """
        for idx in self.playable_edges(x):
            verts = self._edge_verts[idx]
            for choice in itertools.product(*(range(x[v] - 1, -1, -1) for v in verts)):
                move = Move(idx, tuple(zip(verts, choice)))
                yield move, move.apply(x)

    # -- height ---------------------------------------------------------

    def height(self, x: Position) -> int:
        """Maximum number of consecutive moves playable from ``x``."""
        x = self._check_position(x)
        memo = self._height_memo
        if x in memo:
            return memo[x]
        edge_verts = self._edge_verts
        stack = [x]
        while stack:
            pos = stack[-1]
            if pos in memo:
                stack.pop()
                continue
            best = -1
            missing = None
            for verts in edge_verts:
                for v in verts:
                    if pos[v] == 0:
                        break
                else:
                    nxt = list(pos)
                    for v in verts:
                        nxt[v] -= 1
                    nxt = tuple(nxt)
                    val = memo.get(nxt)
                    if val is None:
                        if missing is None:
                            missing = []
                        missing.append(nxt)
                    elif val > best:
                        best = val
            if missing is None:
                if len(memo) >= self.max_memo:
                    raise ResourceCapError("max_memo", f"more than {self.max_memo} height entries")
                memo[pos] = best + 1
                stack.pop()
            else:
                stack.extend(missing)
        return memo[x]

    def height_certificate(self, x: Position) -> HeightCertificate:
        """Edge multiplicities of one longest play, from the height memo."""
        x = self._check_position(x)
        counts: dict[int, int] = {}
        pos = x
        h = self.height(pos)
        while h > 0:
            for idx in self.playable_edges(pos):
                nxt = apply_slow_move(pos, self.hypergraph.edges[idx])
                if self.height(nxt) == h - 1:
                    counts[idx] = counts.get(idx, 0) + 1
                    pos = nxt
                    h -= 1
                    break
            else:
                raise AssertionError("height recursion admitted no height move")
        return HeightCertificate(tuple(sorted(counts.items())))

    # -- Sprague-Grundy ---------------------------------------------------

    def sg(self, x: Position) -> int:
        """Exact Sprague-Grundy value, by memoized mex over all moves."""
        x = self._check_position(x)
        memo = self._sg_memo
        if x in memo:
            return memo[x]
        stack = [x]
        while stack:
            pos = stack[-1]
            if pos in memo:
                stack.pop()
                continue
            vals = set()
            missing = []
            for _, succ in self.enumerate_moves(pos):
                val = memo.get(succ)
                if val is None:
                    missing.append(succ)
                else:
                    vals.add(val)
            if missing:
                stack.extend(missing)
            else:
                if len(memo) >= self.max_memo:
                    raise ResourceCapError("max_memo", f"more than {self.max_memo} sg entries")
                memo[pos] = mex(vals)
                stack.pop()
        return memo[x]

    def optimal_move(self, x: Position) -> Optional[tuple[Move, Position]]:
        """First successor with Sprague-Grundy value 0, in enumeration order.

        Returns None when ``x`` itself is a P position (nothing to win with).
        """
        if self.sg(x) == 0:
            return None
        for move, succ in self.enumerate_moves(x):
            if self.sg(succ) == 0:
                return move, succ
        raise AssertionError("sg > 0 but no SG-0 successor found")


# -- convenience functional surface -------------------------------------


def playable_edges(h: Hypergraph, x: Position) -> list[int]:
    return Engine(h).playable_edges(tuple(x))


def enumerate_moves(h: Hypergraph, x: Position) -> Iterator[tuple[Move, Position]]:
    return Engine(h).enumerate_moves(tuple(x))


def height(h: Hypergraph, x: Position, **caps) -> int:
    return Engine(h, **caps).height(x)


def height_certificate(h: Hypergraph, x: Position, **caps) -> HeightCertificate:
    return Engine(h, **caps).height_certificate(x)


def sg(h: Hypergraph, x: Position, **caps) -> int:
    return Engine(h, **caps).sg(x)


def optimal_move(h: Hypergraph, x: Position, **caps) -> Optional[tuple[Move, Position]]:
    return Engine(h, **caps).optimal_move(x)
