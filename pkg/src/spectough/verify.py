"""Mechanical checks of the lemmas, closed forms and theorems, plus sweeps.

Margins are signed slacks: positive means the inequality holds with room to
spare.  Strict inequalities need ``margin > EPS_STRICT``; non-strict ones
need ``margin >= -EPS_STRICT`` so floating-point round-off on an exact
equality (e.g. regular graphs meeting ``2W/n``) does not fail a case.
"""

from __future__ import annotations

import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Union

import numpy as np

from . import closed_forms as cf
from .errors import InvalidArgument
from .families import (
    FamilyKind,
    OneTough,
    Rdelta,
    Rint,
    Rts,
    SplitFamilyParams,
    TFracTough,
    TIntTough,
    build_extremal,
    build_split,
    canonical_blocks,
    closed_form_quotient,
    enumerate_compositions,
    isolated_split_entries,
    recognize_extremal,
    rsdelta_entries,
    rts_entries,
    t1_order_bound,
    t2i_order_bound,
    t2ii_order_bound,
)
from .graph import Graph, min_degree
from .rng import SplitMix64
from .spectral import (
    EPS_CMP,
    QuotientMatrix,
    charpoly3,
    compare,
    distance_bounds,
    distance_matrix,
    lambda1,
    quotient_matrix,
    spectral_radius,
)
from .toughness import DEFAULT_LIMIT, ToughnessResult, toughness_exact

log = logging.getLogger(__name__)

EPS_STRICT = 1e-9
EQ_TOL = 1e-9


@dataclass
class CheckReport:
    name: str
    passed: bool = True
    cases_run: int = 0
    worst_margin: float | None = None
    details: list[dict] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    counts: dict[str, int] | None = None

    def add(self, margin: float, ok: bool, **record) -> None:
        margin, ok = float(margin), bool(ok)
        self.cases_run += 1
        if self.worst_margin is None or margin < self.worst_margin:
            self.worst_margin = margin
        if not ok:
            self.passed = False
        self.details.append({**record, "margin": margin, "ok": ok})

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "passed": self.passed,
            "cases_run": self.cases_run,
            "worst_margin": self.worst_margin,
            "details": self.details,
            "warnings": self.warnings,
        }
        if self.counts is not None:
            out["counts"] = self.counts
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, default=_jsonable)


def _jsonable(obj):
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (frozenset, set)):
        return sorted(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _strict(margin: float) -> bool:
    return margin > EPS_STRICT


def _weak(margin: float) -> bool:
    return margin >= -EPS_STRICT


# -- lemma checks -------------------------------------------------------------

def check_lemma1(g: Graph) -> CheckReport:
    """Every connectivity-preserving edge deletion strictly raises λ₁."""
    rep = CheckReport("lemma1")
    base = lambda1(g)
    for u, v in g.edges():
        h = g.without_edge(u, v)
        if not h.is_connected():
            continue
        after = lambda1(h)
        margin = after - base
        rep.add(margin, _strict(margin), edge=[u, v], before=base, after=after)
    return rep


def check_lemma2_consistency(kind: FamilyKind) -> CheckReport:
    """Quotient λ₁ over the canonical equitable partition equals full λ₁."""
    rep = CheckReport("lemma2")
    g = build_extremal(kind)
    d = distance_matrix(g)
    full = spectral_radius(d).lambda1
    q = quotient_matrix(d, canonical_blocks(kind))
    ql = q.largest_eigenvalue()
    margin = 1e-8 * full - abs(ql - full)
    rep.add(margin, q.equitable and margin >= 0, kind=repr(kind), full=full,
            quotient=ql, equitable=q.equitable)
    return rep


def check_bounds(g: Graph) -> CheckReport:
    """``2W/n <= λ₁ <= sqrt(2(n-1)W2/n)``, upper equality only for K_n."""
    rep = CheckReport("bounds")
    lam = lambda1(g)
    lower, upper = distance_bounds(g)
    lo_margin = lam - lower
    hi_margin = upper - lam
    at_upper = abs(hi_margin) <= EQ_TOL
    equality_ok = at_upper == g.is_complete()
    margin = min(lo_margin, hi_margin)
    rep.add(margin, _weak(lo_margin) and _weak(hi_margin) and equality_ok,
            n=g.n, lambda1=lam, lower=lower, upper=upper,
            upper_equality=at_upper, complete=g.is_complete())
    return rep


def check_composition_min(n: int, s: int, c: int, p: int = 1) -> CheckReport:
    """λ₁ over ``K_s ∨ (K_{n1} + ... + K_{nc})`` is uniquely minimised at
    ``(n-s-p(c-1), p, ..., p)``.  For ``p >= 2`` only compositions with
    ``n1 >= 2p`` are admissible."""
    rep = CheckReport("compmin")
    comps = list(enumerate_compositions(n - s, c, p, big_first=p >= 2))
    if not comps:
        msg = f"no admissible composition for n={n}, s={s}, c={c}, p={p}"
        log.warning(msg)
        rep.warnings.append(msg)
        return rep
    expected = (n - s - p * (c - 1),) + (p,) * (c - 1)
    values = {comp: lambda1(build_split(SplitFamilyParams(s, comp))) for comp in comps}
    best = values[expected]
    for comp in comps:
        if comp == expected:
            continue
        margin = values[comp] - best
        rep.add(margin, _strict(margin), parts=list(comp), lambda1=values[comp],
                minimiser_lambda1=best)
    if rep.cases_run == 0:
        rep.details.append({"parts": list(expected), "lambda1": best, "only_candidate": True})
    return rep


def check_perron_ratio(n: int, s: int, c: int, p: int) -> CheckReport:
    """Perron entries of ``K_s ∨ (K_{n-s-p(c-1)} + (c-1)K_p)`` satisfy
    ``x_small / x_big = 1 + (n-s-cp)/(λ₁+p+1)``."""
    rep = CheckReport("perron")
    big = n - s - p * (c - 1)
    if c < 2 or big < p or s < 1:
        raise InvalidArgument(f"parameters not constructible: n={n} s={s} c={c} p={p}")
    g = build_split(SplitFamilyParams(s, (big,) + (p,) * (c - 1)))
    res = spectral_radius(distance_matrix(g))
    x_big = res.perron[s]
    x_small = res.perron[s + big]
    ratio = x_small / x_big
    expected = cf.perron_ratio(res.lambda1, n, s, c, p)
    margin = 1e-8 * abs(expected) - abs(ratio - expected)
    rep.add(margin, margin >= 0, n=n, s=s, c=c, p=p, lambda1=res.lambda1,
            ratio=ratio, expected=expected)
    return rep


def check_charpoly(kind: str, **params) -> CheckReport:
    """Exact expansion of ``det(xI - R)`` against its closed form.

    ``kind`` is ``rdelta`` (n, delta), ``rsdelta`` (n, s, delta) or ``rts``
    (n, t, s).  The matrices are taken as rational matrices, so ``rts`` also
    accepts parameters with non-integral block sizes.
    """
    rep = CheckReport("charpoly")
    if kind == "rdelta":
        n, d = params["n"], params["delta"]
        entries = isolated_split_entries(n, d, d)
        closed_form = cf.charpoly_rdelta(n, d)
    elif kind == "rsdelta":
        n, s, d = params["n"], params["s"], params["delta"]
        entries = rsdelta_entries(n, s, d)
        closed_form = cf.charpoly_rsdelta(n, s, d)
    elif kind == "rts":
        n, t, s = params["n"], Fraction(params["t"]), params["s"]
        entries = rts_entries(n, t, s)
        closed_form = cf.charpoly_rts(n, t, s)
    else:
        raise InvalidArgument(f"unknown charpoly kind {kind!r}")
    expanded = charpoly3(entries)
    exact = tuple(expanded) == tuple(closed_form)
    lam = QuotientMatrix(tuple(tuple(r) for r in entries), (1, 1, 1), False).largest_eigenvalue()
    at_root = cf.evaluate(closed_form, lam)
    margin = 1e-6 - abs(at_root)
    rep.add(margin, exact and margin >= 0, kind=kind,
            params={k: str(v) for k, v in params.items()},
            expanded=[str(v) for v in expanded], closed_form=[str(v) for v in closed_form],
            exact_match=exact, lambda1=lam, value_at_lambda1=at_root)
    return rep


# -- theorem classification ---------------------------------------------------

@dataclass(frozen=True)
class T1:
    delta: int


@dataclass(frozen=True)
class T2i:
    t: int


@dataclass(frozen=True)
class T2ii:
    q: int

    @property
    def t(self) -> Fraction:
        return Fraction(1, self.q)


Theorem = Union[T1, T2i, T2ii]

VERDICTS = ("HypothesisNotMet", "SpectralConditionFails", "ConsistentTough",
            "ExtremalMatch", "Counterexample")


@dataclass(frozen=True)
class TheoremClassification:
    verdict: str
    lambda1: float
    threshold: float | None
    margin: float | None
    tough_result: ToughnessResult | None = None
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "lambda1": self.lambda1,
            "threshold": self.threshold,
            "margin": self.margin,
            "tau": None if self.tough_result is None else self.tough_result.to_json()["tau"],
            "witness": None if self.tough_result is None else sorted(self.tough_result.witness),
            "reason": self.reason,
        }


def target_t(which: Theorem) -> Fraction:
    return Fraction(1) if isinstance(which, T1) else Fraction(which.t)


def order_bound(which: Theorem) -> int:
    if isinstance(which, T1):
        return t1_order_bound(which.delta)
    if isinstance(which, T2i):
        return t2i_order_bound(which.t)
    return t2ii_order_bound(which.q)


def extremal_kind(which: Theorem, n: int) -> FamilyKind:
    if isinstance(which, T1):
        return OneTough(n, which.delta)
    if isinstance(which, T2i):
        return TIntTough(n, which.t)
    return TFracTough(n, which.q)


def _hypotheses(g: Graph, which: Theorem) -> str:
    """Empty string when the hypotheses hold, otherwise the failing one."""
    n = g.n
    if isinstance(which, T1):
        if which.delta < 2:
            return "delta >= 2 required"
        if min_degree(g) < which.delta:
            return f"min degree {min_degree(g)} < {which.delta}"
    elif isinstance(which, T2i):
        if which.t < 1:
            return "t must be a positive integer"
    elif which.q < 1:
        return "1/t must be a positive integer"
    bound = order_bound(which)
    if n < bound:
        return f"n={n} below order bound {bound}"
    return ""


_threshold_cache: dict[tuple, float] = {}


def threshold(which: Theorem, n: int) -> float:
    """λ₁ of the extremal graph, from its closed-form quotient."""
    key = (which, n)
    if key not in _threshold_cache:
        if isinstance(which, T1):
            q = closed_form_quotient(Rdelta(n, which.delta))
        elif isinstance(which, T2i):
            q = closed_form_quotient(Rint(n, which.t))
        else:
            q = closed_form_quotient(Rts(n, Fraction(1, which.q), 1))
        _threshold_cache[key] = q.largest_eigenvalue()
    return _threshold_cache[key]


def check_theorem(g: Graph, which: Theorem, limit: int = DEFAULT_LIMIT) -> TheoremClassification:
    if not g.is_connected():
        raise InvalidArgument("check_theorem needs a connected graph")
    lam = lambda1(g) if g.n > 1 else 0.0
    why = _hypotheses(g, which)
    if why:
        return TheoremClassification("HypothesisNotMet", lam, None, None, reason=why)
    thr = threshold(which, g.n)
    margin = thr - lam
    extremal = recognize_extremal(g, extremal_kind(which, g.n))
    sign, _ = compare(lam, thr, EPS_CMP)
    # the extremal graph sits exactly on the threshold; anything else must
    # be clearly below it before the condition counts as met
    if sign > 0 or (sign == 0 and not extremal):
        return TheoremClassification("SpectralConditionFails", lam, thr, margin,
                                     reason="lambda1 above threshold" if sign > 0 else "within tie band")
    tr = None if g.is_complete() else toughness_exact(g, limit)
    tough = tr is None or tr.tau >= target_t(which)
    if extremal:
        return TheoremClassification("ExtremalMatch", lam, thr, margin, tr)
    if tough:
        return TheoremClassification("ConsistentTough", lam, thr, margin, tr)
    return TheoremClassification("Counterexample", lam, thr, margin, tr,
                                 reason="not t-tough, below threshold, not extremal")


# -- populations and sweeps ---------------------------------------------------

EDGE_PROBS = (0.2, 0.35, 0.5, 0.7)


@dataclass(frozen=True)
class RandomPopulation:
    """Erdős–Rényi graphs; each graph draws its edge probability from
    ``EDGE_PROBS``.  Disconnected or low-degree samples are redrawn."""
    n: int
    count: int
    seed: int
    min_delta: int = 0

    def graphs(self) -> Iterator[Graph]:
        rng = SplitMix64(self.seed)
        pairs = list(combinations(range(self.n), 2))
        made = 0
        while made < self.count:
            p = EDGE_PROBS[rng.below(len(EDGE_PROBS))]
            g = Graph(self.n, [e for e in pairs if rng.uniform() < p])
            if g.is_connected() and min_degree(g) >= self.min_delta:
                made += 1
                yield g


@dataclass(frozen=True)
class ExhaustivePopulation:
    """Every connected labelled graph on ``min_n..max_n`` vertices.

    No isomorph rejection.
    """
    max_n: int
    min_n: int = 1

    def graphs(self) -> Iterator[Graph]:
        for n in range(self.min_n, self.max_n + 1):
            yield from connected_graphs(n)


Population = Union[RandomPopulation, ExhaustivePopulation]


def connected_graphs(n: int) -> Iterator[Graph]:
    """All connected labelled graphs on ``n`` vertices by edge-subset mask."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        g = Graph(n, [e for i, e in enumerate(pairs) if mask >> i & 1])
        if g.is_connected():
            yield g


def random_connected(n: int, count: int, seed: int, min_delta: int = 0) -> list[Graph]:
    return list(RandomPopulation(n, count, seed, min_delta).graphs())


def _classify_row(args) -> dict:
    index, g, which, limit = args
    cls = check_theorem(g, which, limit)
    return {
        "n": g.n,
        "seed_index": index,
        "lambda1": cls.lambda1,
        "threshold": cls.threshold,
        "margin": cls.margin,
        "tau": None if cls.tough_result is None else cls.tough_result.to_json()["tau"],
        "verdict": cls.verdict,
    }


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("SPECTOUGH_THREADS", "1")))
    except ValueError:
        return 1


def _population_graphs(population: Population, which: Theorem) -> Iterable[Graph]:
    if isinstance(population, ExhaustivePopulation):
        # orders below the hypothesis bound cannot produce a checked case
        lo = max(population.min_n, order_bound(which))
        return ExhaustivePopulation(population.max_n, lo).graphs()
    return population.graphs()


def sweep(population: Population, which: Theorem, limit: int = DEFAULT_LIMIT,
          workers: int | None = None) -> CheckReport:
    """Classify every graph of the population; passes iff no Counterexample.

    ``worst_margin`` is the smallest ``λ₁ - threshold`` among graphs that meet
    the hypotheses and are neither extremal nor known to be t-tough.
    """
    rep = CheckReport("sweep")
    counts = {v: 0 for v in VERDICTS}
    workers = workers or worker_count()
    jobs = ((i, g, which, limit) for i, g in enumerate(_population_graphs(population, which)))
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            rows = list(pool.map(_classify_row, jobs, chunksize=16))
    else:
        rows = [_classify_row(j) for j in jobs]
    for row in rows:
        verdict = row["verdict"]
        counts[verdict] += 1
        rep.cases_run += 1
        rep.details.append(row)
        if verdict == "Counterexample":
            rep.passed = False
        if verdict in ("SpectralConditionFails", "Counterexample"):
            m = -row["margin"]
            if rep.worst_margin is None or m < rep.worst_margin:
                rep.worst_margin = m
    rep.counts = counts
    if rep.cases_run == 0:
        rep.warnings.append("population produced no graphs")
    return rep
