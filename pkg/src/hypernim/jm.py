"""The closed-formula candidate for the Sprague-Grundy value.

For a position x the formula combines four quantities:

  m(x)  smallest pile;
  y(x)  height of x - m(x)*e, plus one (e = all-ones vector);
  v(x)  C(y,2) + ((m - C(y,2) - 1) mod y), taken with floored mod so the
        result lies in [C(y,2), C(y+1,2)) even when the argument is negative;
  U(x)  the height of x when the position is long (m <= C(y,2)),
        and v(x) otherwise (short).

A hypergraph on which U equals the Sprague-Grundy function everywhere is
exactly what the verification module hunts for on bounded boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .engine import Engine, Position
from .hypergraph import Hypergraph


def _binom2(y: int) -> int:
    return y * (y - 1) // 2


def z_interval(eta: int) -> range:
    """The half-open integer interval [C(eta,2), C(eta+1,2)).

    The intervals for eta = 1, 2, ... are disjoint and tile the
    nonnegative integers; v(x) always lands in z_interval(y(x)).
    """
    if eta < 1:
        raise ValueError("eta must be a positive integer")
    return range(_binom2(eta), _binom2(eta + 1))


@dataclass(frozen=True)
class JmProfile:
    """The formula's view of one position."""

    m: int
    y: int
    v: int
    is_long: bool
    u: int

    @property
    def kind(self) -> str:
        return "long" if self.is_long else "short"


def jm_profile(h: Union[Hypergraph, Engine], x: Position) -> JmProfile:
    """Compute (m, y, v, class, U) for position ``x``.

    Accepts a Hypergraph (a fresh engine is created) or an Engine whose
    memo should be reused.  The height of x itself is only computed for
    long positions; short positions need only the height of x - m*e.
    """
    engine = h if isinstance(h, Engine) else Engine(h)
    x = tuple(x)
    m = min(x)
    y = engine.height(tuple(v - m for v in x)) + 1
    b = _binom2(y)
    v = b + (m - b - 1) % y
    is_long = m <= b
    u = engine.height(x) if is_long else v
    return JmProfile(m=m, y=y, v=v, is_long=is_long, u=u)
