"""Structural properties that decide or constrain formula conformance.

Checkable facts about a hypergraph itself: the matroid exchange axiom,
self-duality, the chain condition (D1) between edge pairs, the subfamily
condition (D3), the per-position condition (D2), and the K1-K3 conditions
for the k-subset-minus-forbidden construction.  ``jm_sufficiency`` combines
them into a three-valued verdict: minimal transversal-freeness together
with (D1) and (D3) proves conformance, a failed necessary condition
(connectivity, minimal transversal-freeness) refutes it, and anything
else stays honestly unknown.
"""

from __future__ import annotations

import enum
import itertools
import random
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .engine import Engine, Position, ResourceCapError
from .hypergraph import (
    Hypergraph,
    VertexSet,
    is_connected,
    minimal_transversal_free_witness,
    uniformity,
)

D3_MAX_VERTICES = 20
D3_MAX_SUPPORT_SCANS = 10_000_000


def exchange_axiom_holds(h: Hypergraph) -> bool:
    """Basis exchange: for H, H' and i in H\\H' some j in H'\\H swaps in.

    Only uniform hypergraphs qualify (base families of matroids are).
    """
    if uniformity(h) is None:
        raise ValueError("exchange axiom requires uniform hypergraph")
    masks = h.edge_masks()
    members = h._edge_mask_set
    for a, b in itertools.permutations(masks, 2):
        out = a & ~b
        into = b & ~a
        while out:
            ibit = out & -out
            out ^= ibit
            rest = into
            while rest:
                jbit = rest & -rest
                rest ^= jbit
                if (a ^ ibit) | jbit in members:
                    break
            else:
                return False
    return True


def is_self_dual(h: Hypergraph) -> bool:
    """True iff the complement of every edge is an edge."""
    full = (1 << h.n) - 1
    return all(full ^ em in h._edge_mask_set for em in h.edge_masks())


def chain_exists(h: Hypergraph, a: VertexSet, b: VertexSet) -> bool:
    """Is there a chain a = H_0, ..., H_p = b inside a ∪ b?

    Consecutive chain members must intersect and may introduce at most one
    new vertex (|H_{k+1} \\ H_k| <= 1); every member must be a subset of
    a ∪ b.  A single edge is a chain, so a == b is always reachable.
    """
    if not h.has_edge(a) or not h.has_edge(b):
        raise ValueError("chain endpoints must be edges of the hypergraph")
    if a == b:
        return True
    hull = a.mask | b.mask
    nodes = [em for em in h.edge_masks() if em & ~hull == 0]
    seen = {a.mask}
    queue = deque([a.mask])
    while queue:
        cur = queue.popleft()
        for em in nodes:
            if em in seen or not em & cur:
                continue
            if (em & ~cur).bit_count() > 1:
                continue
            if em == b.mask:
                return True
            seen.add(em)
            queue.append(em)
    return False


def has_chain_property(h: Hypergraph) -> bool:
    """Condition (D1): chains exist between all edge pairs."""
    for a, b in itertools.combinations(h.edges, 2):
        if not chain_exists(h, a, b) or not chain_exists(h, b, a):
            return False
    return True


def _d3_feasible(h: Hypergraph) -> Optional[str]:
    if h.n > D3_MAX_VERTICES:
        return f"D3 scan needs 2^n supports; n={h.n} exceeds {D3_MAX_VERTICES}"
    if (1 << h.n) * len(h.edges) > D3_MAX_SUPPORT_SCANS:
        return (
            f"D3 scan of 2^{h.n} supports over {len(h.edges)} edges exceeds "
            f"the {D3_MAX_SUPPORT_SCANS} work cap"
        )
    return None


def satisfies_d3(h: Hypergraph, *, witness: Optional[list] = None) -> bool:
    """Condition (D3) on subfamilies with incomplete support.

    For every nonempty subfamily F with support W != V there must be
    F in F and S in the hypergraph with a nonempty S\\F outside W.

    Enumeration is over supports W, not over the 2^|edges| subfamilies:
    call an edge F ⊆ W *bad for W* when no edge S has ∅ ≠ S\\F ⊆ V\\W.
    A violating subfamily exists iff for some W the bad edges alone cover
    W (the set of all bad edges is then itself a violating subfamily, and
    any violating subfamily consists of bad edges).  This decides (D3)
    exactly in 2^n support scans.
    """
    reason = _d3_feasible(h)
    if reason is not None:
        raise ResourceCapError("d3_scan", reason)
    masks = h.edge_masks()
    full = (1 << h.n) - 1
    for w in range(full):
        inside = [f for f in masks if f & ~w == 0]
        if not inside:
            continue
        bad_union = 0
        bad = []
        for f in inside:
            for s in masks:
                if s & w & ~f == 0 and s & ~f != 0:
                    break
            else:
                bad.append(f)
                bad_union |= f
        if bad and bad_union == w:
            if witness is not None:
                witness.append(
                    {
                        "support": VertexSet.from_mask(w),
                        "subfamily": [VertexSet.from_mask(f) for f in bad],
                    }
                )
            return False
    return True


def satisfies_d2_at(h: Hypergraph, x: Position, *, engine: Optional[Engine] = None) -> bool:
    """Condition (D2) at one everywhere-positive position.

    True iff some edge gives a slow height move through a minimum pile:
    height(x - chi(H)) = height(x) - 1 with min over H of x equal to m(x).
    """
    x = tuple(x)
    m = min(x)
    if m <= 0:
        raise ValueError("D2 defined only for positive positions")
    eng = engine if engine is not None else Engine(h)
    hx = eng.height(x)
    for e in h.edges:
        verts = e.vertices()
        if min(x[v] for v in verts) != m:
            continue
        nxt = list(x)
        for v in verts:
            nxt[v] -= 1
        if eng.height(tuple(nxt)) == hx - 1:
            return True
    return False


@dataclass(frozen=True)
class KConstructionCheck:
    k1: bool  # pairwise intersections at least delta
    k2: bool  # distinct pairs intersect in at most k-2 vertices
    k3: bool  # no single vertex meets every edge

    def all_hold(self) -> bool:
        return self.k1 and self.k2 and self.k3


def check_k_construction(kk: Hypergraph, k: int, delta: int) -> KConstructionCheck:
    """Check conditions K1-K3 of a (k+delta-1)-uniform forbidden family."""
    if not 0 < delta <= k - 3:
        raise ValueError(f"need 0 < delta <= k-3, got k={k}, delta={delta}")
    if uniformity(kk) != k + delta - 1:
        raise ValueError(f"forbidden family must be {k + delta - 1}-uniform")
    masks = kk.edge_masks()
    k1 = all(
        (a & b).bit_count() >= delta for a, b in itertools.combinations(masks, 2)
    )
    k2 = all(
        (a & b).bit_count() <= k - 2 for a, b in itertools.combinations(masks, 2)
    )
    k3 = all(
        any(not (em >> v) & 1 for em in masks) for v in range(kk.n)
    )
    return KConstructionCheck(k1=k1, k2=k2, k3=k3)


class Verdict(enum.Enum):
    PROVABLY_JM = "provably_jm"
    PROVABLY_NOT_JM = "provably_not_jm"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class JmVerdict:
    tag: Verdict
    witness: dict = field(default_factory=dict)


def jm_sufficiency(h: Hypergraph, d2_box_bound: int = 3) -> JmVerdict:
    """Three-valued conformance verdict from structural conditions.

    PROVABLY_NOT_JM when a necessary condition fails (connectivity or
    minimal transversal-freeness).  PROVABLY_JM when minimal
    transversal-freeness, (D1) and (D3) all hold — the theorem route, per
    position-independent conditions only.  Otherwise UNKNOWN; condition
    (D2) sampled over [1..d2_box_bound]^n is attached as advisory evidence
    because box sampling of a position-quantified condition proves nothing.
    """
    if d2_box_bound < 1:
        raise ValueError("d2_box_bound must be at least 1")
    if not is_connected(h):
        return JmVerdict(Verdict.PROVABLY_NOT_JM, {"failed": "connected"})
    mtf = minimal_transversal_free_witness(h)
    if mtf is not None:
        kind, vs = mtf
        return JmVerdict(
            Verdict.PROVABLY_NOT_JM,
            {"failed": "minimal_transversal_free", kind: vs},
        )
    d1 = has_chain_property(h)
    d3_witness: list = []
    try:
        d3 = satisfies_d3(h, witness=d3_witness)
    except ResourceCapError as exc:
        d3 = None
        d3_witness = [{"error": str(exc)}]
    if d1 and d3:
        return JmVerdict(Verdict.PROVABLY_JM, {"holds": ("A1", "D1", "D3")})
    info: dict = {"A1": True, "D1": d1, "D3": d3}
    if d3_witness:
        info["d3_witness"] = d3_witness[0]
    info["d2_advisory"] = _sample_d2(h, d2_box_bound)
    return JmVerdict(Verdict.UNKNOWN, info)


def _sample_d2(h: Hypergraph, bound: int, cap: int = 20_000, samples: int = 2_000) -> dict:
    """Advisory D2 evidence over [1..bound]^n: exhaustive if small, sampled."""
    eng = Engine(h)
    total = bound ** h.n
    if total <= cap:
        positions = itertools.product(range(1, bound + 1), repeat=h.n)
        exhaustive = True
    else:
        rng = random.Random(0)
        positions = (
            tuple(rng.randint(1, bound) for _ in range(h.n)) for _ in range(samples)
        )
        exhaustive = False
    checked = 0
    first_violation = None
    violations = 0
    for x in positions:
        checked += 1
        if not satisfies_d2_at(h, x, engine=eng):
            violations += 1
            if first_violation is None:
                first_violation = x
    return {
        "bound": bound,
        "exhaustive": exhaustive,
        "checked": checked,
        "violations": violations,
        "first_violation": first_violation,
    }
