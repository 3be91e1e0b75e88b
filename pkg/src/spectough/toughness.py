"""Exact toughness by pruned exhaustive cut-set enumeration.

Subsets are visited by increasing size and, within one size, in the
lexicographic order of their sorted vertex tuples (``itertools.combinations``
order).  The reported witness is therefore the first minimiser in that order.
All ratio comparisons use :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InvalidArgument, NotConnectedError, SizeGuardError, ToughnessUndefinedError
from .graph import Graph, _bits, _reach, count_components, mask_of, min_degree

DEFAULT_LIMIT = 24


@dataclass(frozen=True)
class ToughnessResult:
    tau: Fraction
    witness: frozenset[int]
    components: int

    def to_json(self) -> dict:
        return {
            "tau": f"{self.tau.numerator}/{self.tau.denominator}",
            "witness": sorted(self.witness),
            "components": self.components,
        }


def _check_input(g: Graph, limit: int) -> None:
    reached = _reach(g.rows, 0, (1 << g.n) - 1)
    if reached != (1 << g.n) - 1:
        missing = next(v for v in range(g.n) if not reached >> v & 1)
        raise NotConnectedError(0, missing)
    if g.n > limit:
        raise SizeGuardError(
            f"n={g.n} exceeds the enumeration limit {limit}; "
            "use is_t_tough or raise the limit explicitly (cost grows as 2^n)"
        )


def independence_number(g: Graph) -> int:
    """Size of a maximum independent set (branch and bound on bitmasks)."""
    rows = g.rows

    def mis(cand: int) -> int:
        if not cand:
            return 0
        # a vertex of degree <= 1 inside cand is always safe to take
        best_v, best_deg = -1, None
        for v in _bits(cand):
            d = (rows[v] & cand).bit_count()
            if d <= 1:
                return 1 + mis(cand & ~rows[v] & ~(1 << v))
            if best_deg is None or d > best_deg:
                best_v, best_deg = v, d
        v = best_v
        return max(mis(cand & ~(1 << v)), 1 + mis(cand & ~rows[v] & ~(1 << v)))

    return mis((1 << g.n) - 1)


def _max_components(n: int, k: int, delta: int) -> int:
    """Upper bound on ``c(G - S)`` for ``|S| = k``.

    Each remaining vertex keeps at least ``delta - k`` neighbours outside
    ``S``, so every component has at least ``max(1, delta - k + 1)`` vertices.
    """
    return (n - k) // max(1, delta - k + 1)


def _cuts(g: Graph, k: int):
    rows = g.rows
    full = (1 << g.n) - 1
    for combo in combinations(range(g.n), k):
        alive = full & ~mask_of(combo)
        c = count_components(rows, alive)
        if c >= 2:
            yield combo, c


def toughness_exact(g: Graph, limit: int = DEFAULT_LIMIT) -> ToughnessResult:
    """Minimise ``|S| / c(G - S)`` over all vertex cut sets ``S``."""
    if g.is_complete():
        raise ToughnessUndefinedError("toughness is undefined for complete graphs")
    _check_input(g, limit)
    n = g.n
    delta = min_degree(g)
    alpha = independence_number(g)  # c(G - S) <= alpha(G - S) <= alpha(G)
    best: Fraction | None = None
    best_set: tuple[int, ...] = ()
    best_c = 0
    for k in range(1, n - 1):
        if best is not None and Fraction(k, min(n - k, alpha)) >= best:
            break
        cmax = min(_max_components(n, k, delta), alpha)
        if cmax < 2 or (best is not None and Fraction(k, cmax) >= best):
            continue
        for combo, c in _cuts(g, k):
            r = Fraction(k, c)
            if best is None or r < best:
                best, best_set, best_c = r, combo, c
                if Fraction(k, cmax) >= best:
                    break
    assert best is not None  # connected non-complete graphs have a cut set
    return ToughnessResult(best, frozenset(best_set), best_c)


def is_t_tough(
    g: Graph, t: Fraction | int, limit: int = DEFAULT_LIMIT
) -> tuple[bool, frozenset[int] | None]:
    """Decide ``τ(g) >= t``; on failure also return a violating cut set."""
    t = Fraction(t)
    if t <= 0:
        raise InvalidArgument("t must be positive")
    if g.is_complete():
        return True, None
    _check_input(g, limit)
    n = g.n
    delta = min_degree(g)
    alpha = independence_number(g)
    for k in range(1, n - 1):
        # |S| < t*c needs c > k/t, but c <= min(n-k, alpha)
        if Fraction(k, min(n - k, alpha)) >= t:
            break
        cmax = min(_max_components(n, k, delta), alpha)
        if cmax < 2 or Fraction(k, cmax) >= t:
            continue
        for combo, c in _cuts(g, k):
            if k < t * c:
                return False, frozenset(combo)
    return True, None
