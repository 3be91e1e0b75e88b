"""Split graphs ``K_s ∨ (K_{n1} + ... + K_{nc})`` and the extremal families.

Label layout of :func:`build_split`: the join clique takes ``0..s-1``, then
each part in the given order.

Closed-form quotients use the block order (isolated/small parts, large
clique, join clique).  For ``Rdelta`` the blocks are ``(δ, n-2δ, δ)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterator, Union

from .errors import InvalidArgument
from .graph import Graph, build_complete, components_after_removal, disjoint_union, join
from .spectral import QuotientMatrix


@dataclass(frozen=True)
class SplitFamilyParams:
    s: int
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if self.s < 1:
            raise InvalidArgument("s must be positive")
        if not self.parts:
            raise InvalidArgument("parts must be nonempty")
        if any(p < 1 for p in self.parts) or list(self.parts) != sorted(self.parts, reverse=True):
            raise InvalidArgument(f"parts must be positive and nonincreasing: {self.parts}")

    @property
    def n(self) -> int:
        return self.s + sum(self.parts)

    @property
    def c(self) -> int:
        return len(self.parts)


@dataclass(frozen=True)
class OneTough:
    """``K_δ ∨ (K_{n-2δ} + δK_1)``."""
    n: int
    delta: int


@dataclass(frozen=True)
class TIntTough:
    """``K_{2t-1} ∨ (K_{n-2t} + K_1)`` for a positive integer ``t``."""
    n: int
    t: int


@dataclass(frozen=True)
class TFracTough:
    """``K_1 ∨ (K_{n-1-q} + qK_1)`` with ``t = 1/q``."""
    n: int
    q: int

    @property
    def t(self) -> Fraction:
        return Fraction(1, self.q)


@dataclass(frozen=True)
class Split:
    params: SplitFamilyParams


FamilyKind = Union[OneTough, TIntTough, TFracTough, Split]


def build_split(params: SplitFamilyParams) -> Graph:
    if not params.parts:
        raise InvalidArgument("parts must be nonempty")
    body = build_complete(params.parts[0])
    for size in params.parts[1:]:
        body = disjoint_union(body, build_complete(size))
    return join(build_complete(params.s), body)


def split_params(kind: FamilyKind) -> SplitFamilyParams:
    """Validate ``kind`` and return its split-graph parameters."""
    if isinstance(kind, OneTough):
        n, d = kind.n, kind.delta
        if d < 2 or n < 2 * d + 1:
            raise InvalidArgument(f"OneTough needs delta >= 2 and n >= 2*delta+1, got {kind}")
        return SplitFamilyParams(d, (n - 2 * d,) + (1,) * d)
    if isinstance(kind, TIntTough):
        n, t = kind.n, kind.t
        if t < 1 or n < 2 * t + 1:
            raise InvalidArgument(f"TIntTough needs t >= 1 and n >= 2t+1, got {kind}")
        return SplitFamilyParams(2 * t - 1, (n - 2 * t, 1))
    if isinstance(kind, TFracTough):
        n, q = kind.n, kind.q
        if q < 1 or n < q + 2:
            raise InvalidArgument(f"TFracTough needs q >= 1 and n >= q+2, got {kind}")
        return SplitFamilyParams(1, (n - 1 - q,) + (1,) * q)
    if isinstance(kind, Split):
        return kind.params
    raise InvalidArgument(f"unknown family kind {kind!r}")


def build_extremal(kind: FamilyKind) -> Graph:
    return build_split(split_params(kind))


def canonical_blocks(kind: FamilyKind) -> list[list[int]]:
    """Equitable partition in quotient order for ``kind``.

    Extremal kinds give three blocks (singleton parts, big clique, join
    clique).  ``Split`` gives the join clique followed by one block per part.
    """
    p = split_params(kind)
    starts = [p.s]
    for size in p.parts:
        starts.append(starts[-1] + size)
    part_blocks = [list(range(a, a + size)) for a, size in zip(starts, p.parts)]
    join_block = list(range(p.s))
    if isinstance(kind, Split):
        return [join_block] + part_blocks
    singles = [v for b in part_blocks[1:] for v in b]
    return [singles, part_blocks[0], join_block]


def recognize_split(g: Graph, params: SplitFamilyParams) -> bool:
    """Structural test for ``g ≅ K_s ∨ (K_{n1} + ... + K_{nc})``."""
    n = g.n
    if n != params.n:
        return False
    if params.c == 1:
        return g.is_complete()
    universal = [v for v in range(n) if g.degree(v) == n - 1]
    if len(universal) != params.s:
        return False
    _, comps = components_after_removal(g, universal)
    sizes = []
    for comp in comps:
        k = len(comp)
        if any(g.degree(v) != k - 1 + params.s for v in comp):
            return False
        sizes.append(k)
    return sorted(sizes, reverse=True) == list(params.parts)


def recognize_extremal(g: Graph, kind: FamilyKind) -> bool:
    try:
        params = split_params(kind)
    except InvalidArgument:
        return False
    return recognize_split(g, params)


def enumerate_compositions(total: int, c: int, p: int = 1, big_first: bool = False) -> Iterator[tuple[int, ...]]:
    """Nonincreasing ``c``-part lists with parts ``>= p`` summing to ``total``.

    Yields in reverse-lexicographic order.  ``big_first`` keeps only lists
    with first part at least ``2p``.
    """
    if c < 1 or p < 1 or total < c * p:
        return

    def rec(remaining: int, slots: int, cap: int, prefix: tuple[int, ...]):
        if slots == 0:
            if remaining == 0:
                yield prefix
            return
        hi = min(cap, remaining - p * (slots - 1))
        lo = -(-remaining // slots)  # the largest of the rest is at least the average
        for first in range(hi, max(lo, p) - 1, -1):
            yield from rec(remaining - first, slots - 1, first, prefix + (first,))

    for comp in rec(total, c, total, ()):
        if big_first and comp[0] < 2 * p:
            continue
        yield comp


def count_partitions(total: int, c: int, p: int = 1) -> int:
    """Partitions of ``total`` into exactly ``c`` parts each ``>= p`` (DP count)."""
    if c < 1 or total < c * p:
        return 0
    m = total - c * (p - 1)  # shift every part down to >= 1
    # dp[k][j]: partitions of j into exactly k positive parts
    dp = [[0] * (m + 1) for _ in range(c + 1)]
    dp[0][0] = 1
    for k in range(1, c + 1):
        for j in range(k, m + 1):
            dp[k][j] = dp[k - 1][j - 1] + dp[k][j - k]
    return dp[c][m]


# -- closed-form quotient matrices --------------------------------------------

@dataclass(frozen=True)
class Rdelta:
    n: int
    delta: int


@dataclass(frozen=True)
class Rs:
    n: int
    s: int


@dataclass(frozen=True)
class RsDelta:
    n: int
    s: int
    delta: int


@dataclass(frozen=True)
class Rts:
    n: int
    t: Fraction
    s: int


@dataclass(frozen=True)
class Rint:
    """Quotient of ``K_{2t-1} ∨ (K_{n-2t} + K_1)`` (blocks ``1, n-2t, 2t-1``)."""
    n: int
    t: int


QuotientKind = Union[Rdelta, Rs, RsDelta, Rts, Rint]


def isolated_split_entries(n, s, k) -> list[list[Fraction]]:
    """Quotient of ``K_s ∨ (K_{n-s-k} + kK_1)`` over (singletons, big clique, join).

    Entries are exact for rational ``k``; ``Rdelta``, ``Rs`` and ``Rts`` are all
    instances of this matrix.
    """
    n, s, k = Fraction(n), Fraction(s), Fraction(k)
    m = n - s - k
    return [
        [2 * (k - 1), 2 * m, s],
        [2 * k, m - 1, s],
        [k, m, s - 1],
    ]


def rsdelta_entries(n, s, delta) -> list[list[Fraction]]:
    n, s, d = Fraction(n), Fraction(s), Fraction(delta)
    m = n - s - (d - s + 1) * s
    return [
        [(d - s) + 2 * (s - 1) * (d - s + 1), 2 * m, s],
        [2 * s * (d - s + 1), m - 1, s],
        [s * (d - s + 1), m, s - 1],
    ]


def rts_entries(n, t, s) -> list[list[Fraction]]:
    return isolated_split_entries(n, s, Fraction(s) / Fraction(t))


def _as_quotient(entries, sizes) -> QuotientMatrix:
    if any(v < 0 for row in entries for v in row):
        raise InvalidArgument("parameters give a negative quotient entry")
    if any(sz < 1 or Fraction(sz).denominator != 1 for sz in sizes):
        raise InvalidArgument(f"block sizes must be positive integers, got {sizes}")
    return QuotientMatrix(
        tuple(tuple(Fraction(v) for v in row) for row in entries),
        tuple(int(sz) for sz in sizes),
        True,
    )


def closed_form_quotient(kind: QuotientKind) -> QuotientMatrix:
    if isinstance(kind, Rdelta):
        n, d = kind.n, kind.delta
        return _as_quotient(isolated_split_entries(n, d, d), (d, n - 2 * d, d))
    if isinstance(kind, Rs):
        n, s = kind.n, kind.s
        return _as_quotient(isolated_split_entries(n, s, s), (s, n - 2 * s, s))
    if isinstance(kind, RsDelta):
        n, s, d = kind.n, kind.s, kind.delta
        if not 1 <= s <= d:
            raise InvalidArgument("RsDelta needs 1 <= s <= delta")
        small = s * (d - s + 1)
        return _as_quotient(rsdelta_entries(n, s, d), (small, n - s - small, s))
    if isinstance(kind, Rts):
        n, t, s = kind.n, Fraction(kind.t), kind.s
        k = Fraction(s) / t
        return _as_quotient(rts_entries(n, t, s), (k, n - s - k, s))
    if isinstance(kind, Rint):
        n, t = kind.n, kind.t
        if t < 1:
            raise InvalidArgument("Rint needs t >= 1")
        return _as_quotient(isolated_split_entries(n, 2 * t - 1, 1), (1, n - 2 * t, 2 * t - 1))
    raise InvalidArgument(f"unknown quotient kind {kind!r}")


def quotient_graph(kind: QuotientKind) -> tuple[Graph, list[list[int]]]:
    """The split graph a closed-form quotient describes, with its blocks."""
    q = closed_form_quotient(kind)
    k, big, s = q.block_sizes
    if isinstance(kind, RsDelta):
        part = kind.delta - kind.s + 1
        params = SplitFamilyParams(s, tuple(sorted((big,) + (part,) * kind.s, reverse=True)))
        g = build_split(params)
        # build_split sorts parts, so locate blocks by structure, not by label
        universal = list(range(s))
        starts = [s]
        for size in params.parts:
            starts.append(starts[-1] + size)
        part_ranges = [list(range(a, a + size)) for a, size in zip(starts, params.parts)]
        big_idx = next(i for i, r in enumerate(part_ranges) if len(r) == big)
        small = [v for i, r in enumerate(part_ranges) if i != big_idx for v in r]
        return g, [small, part_ranges[big_idx], universal]
    params = SplitFamilyParams(s, tuple(sorted((big,) + (1,) * k, reverse=True)))
    g = build_split(params)
    starts = s
    big_block = list(range(starts, starts + big)) if big >= 1 else []
    singles = [v for v in range(s, g.n) if v not in set(big_block)]
    return g, [singles, big_block, list(range(s))]


# -- theorem hypotheses -------------------------------------------------------

def t1_order_bound(delta: int) -> int:
    """Smallest admissible order: ``n >= max(8δ, δ²/2 + 2δ + 2)``."""
    return max(8 * delta, ceil(Fraction(delta * delta, 2) + 2 * delta + 2))


def t2i_order_bound(t: int) -> int:
    return 4 * t * t + 10 * t


def t2ii_order_bound(q: int) -> int:
    """``n >= 2t + 9/(2t) + 9/2`` with ``t = 1/q``."""
    t = Fraction(1, q)
    return ceil(2 * t + Fraction(9) / (2 * t) + Fraction(9, 2))
