"""
Exact search over vertex subsets: zero forcing number, all minimum zero
forcing sets, propagation time statistics, and all sets of forces of a
zero forcing set.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional

from constants import (
    DEFAULT_MAX_FORCE_SETS,
    DEFAULT_MAX_ORDER_FORCE_ENUM,
    DEFAULT_MAX_ORDER_Z,
    DEFAULT_MAX_SUBSETS,
)
from errors import BudgetExceededError, NotForcingError, PreconditionError, TheoremViolation
from forcing import ForceSet, force_propagation_time, propagation_time_of_mask, terminus
from graphs import Graph, encode_graph6, is_connected, mask_of, members
from reports import AnalysisReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchBudget:
    max_order: int = DEFAULT_MAX_ORDER_Z
    max_subsets: int = DEFAULT_MAX_SUBSETS
    max_force_order: int = DEFAULT_MAX_ORDER_FORCE_ENUM
    max_force_sets: int = DEFAULT_MAX_FORCE_SETS


DEFAULT_BUDGET = SearchBudget()


# MINIMUM ZERO FORCING SETS

def _scan_level(g: Graph, k: int, lead: Optional[int] = None,
                first_only: bool = False) -> list[tuple[tuple[int, ...], int]]:
    """Forcing k-subsets (with their propagation times) in lexicographic
    order, optionally only those whose smallest element is `lead`."""
    found = []
    if lead is None:
        candidates = combinations(range(g.n), k)
    else:
        candidates = ((lead,) + rest for rest in combinations(range(lead + 1, g.n), k - 1))
    for subset in candidates:
        pt = propagation_time_of_mask(g, mask_of(subset))
        if pt is not None:
            found.append((subset, pt))
            if first_only:
                break
    return found


def _scan_lead(args: tuple[Graph, int, int]) -> list[tuple[tuple[int, ...], int]]:
    g, k, lead = args
    return _scan_level(g, k, lead)


def _check_order(g: Graph, budget: SearchBudget) -> None:
    if g.n > budget.max_order:
        raise BudgetExceededError("zero forcing search order", budget.max_order, g.n)


def _levels(g: Graph, budget: SearchBudget) -> Iterator[int]:
    """Candidate sizes k = delta(G), ..., n, charging each level to the
    subset budget before it is scanned."""
    _check_order(g, budget)
    lower = min(g.degrees(), default=0)
    examined = 0
    for k in range(lower, g.n + 1):
        examined += comb(g.n, k)
        if examined > budget.max_subsets:
            raise BudgetExceededError("zero forcing subsets", budget.max_subsets, examined)
        yield k


def zero_forcing_number(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> tuple[int, frozenset[int]]:
    """Z(G) together with the lexicographically first minimum zero forcing set."""
    for k in _levels(g, budget):
        found = _scan_level(g, k, first_only=True)
        if found:
            return k, frozenset(found[0][0])
    raise AssertionError("V(G) is always zero forcing")


def _min_zfs_with_times(g: Graph, budget: SearchBudget,
                        jobs: int = 1) -> tuple[int, list[tuple[tuple[int, ...], int]]]:
    for k in _levels(g, budget):
        if jobs > 1 and k > 1 and g.n > k:
            leads = range(g.n - k + 1)
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                parts = pool.map(_scan_lead, [(g, k, lead) for lead in leads])
                found = [item for part in parts for item in part]
        else:
            found = _scan_level(g, k)
        if found:
            logger.debug("Z=%d with %d minimum zero forcing sets", k, len(found))
            return k, found
    raise AssertionError("V(G) is always zero forcing")


def enumerate_min_zfs(g: Graph, budget: SearchBudget = DEFAULT_BUDGET,
                      jobs: int = 1) -> list[frozenset[int]]:
    """All minimum zero forcing sets, in lexicographic order."""
    _, found = _min_zfs_with_times(g, budget, jobs)
    return [frozenset(subset) for subset, _ in found]


def analyze(g: Graph, budget: SearchBudget = DEFAULT_BUDGET, jobs: int = 1) -> AnalysisReport:
    z, found = _min_zfs_with_times(g, budget, jobs)
    times = [pt for _, pt in found]
    pt, PT = min(times), max(times)
    eff = [list(subset) for subset, t in found if t == pt]
    intersection = set(eff[0])
    for b in eff[1:]:
        intersection &= set(b)
    report = AnalysisReport(
        graph6=encode_graph6(g),
        n=g.n,
        m=g.m,
        Z=z,
        pt=pt,
        PT=PT,
        pd=PT - pt,
        realized_times=sorted(set(times)),
        min_zfs=[list(subset) for subset, _ in found],
        times=times,
        eff=eff,
        eff_intersection=sorted(intersection),
    )
    _check_time_bounds(report)
    return report


def _check_time_bounds(report: AnalysisReport) -> None:
    if not report.PT <= report.n - report.Z:
        raise TheoremViolation("PT(G) <= |G| - Z(G)", report.graph6, f"PT={report.PT}")
    if report.Z and report.Z * report.pt < report.n - report.Z:
        raise TheoremViolation("(|G| - Z(G)) / Z(G) <= pt(G)", report.graph6, f"pt={report.pt}")


def efficient_sets(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> list[frozenset[int]]:
    return analyze(g, budget).eff_sets()


# SETS OF FORCES

def enumerate_force_sets(g: Graph, b: frozenset[int],
                         budget: SearchBudget = DEFAULT_BUDGET) -> list[ForceSet]:
    """Every set of forces of B, each exactly once.

    Explores chronological lists one legal force at a time, memoizing the
    forces performed so far, and keeps the completed unordered sets.
    """
    if g.n > budget.max_force_order:
        raise BudgetExceededError("force-set enumeration order", budget.max_force_order, g.n)
    base = frozenset(b)
    full = g.full_mask
    results: set[frozenset[tuple[int, int]]] = set()
    visited: set[frozenset[tuple[int, int]]] = set()
    stack: list[tuple[int, frozenset[tuple[int, int]]]] = [(mask_of(base), frozenset())]
    while stack:
        black, forces = stack.pop()
        if forces in visited:
            continue
        visited.add(forces)
        if black == full:
            results.add(forces)
            if len(results) > budget.max_force_sets:
                partial = [ForceSet(base, f) for f in sorted(results, key=sorted)]
                raise BudgetExceededError("force sets", budget.max_force_sets, len(results), partial)
            continue
        for v in members(black):
            white = g.adj[v] & ~black
            if white and white & (white - 1) == 0:
                stack.append((black | white, forces | {(v, white.bit_length() - 1)}))
    if not results:
        raise NotForcingError(f"{sorted(base)} is not a zero forcing set")
    return [ForceSet(base, f) for f in sorted(results, key=sorted)]


def efficient_force_sets(g: Graph, budget: SearchBudget = DEFAULT_BUDGET,
                         report: Optional[AnalysisReport] = None) -> list[ForceSet]:
    """All efficient sets of forces of efficient zero forcing sets."""
    report = report or analyze(g, budget)
    out = []
    for b in report.eff_sets():
        for f in enumerate_force_sets(g, b, budget):
            if force_propagation_time(g, f).pt == report.pt:
                out.append(f)
    return out


def efficient_intersection(g: Graph, budget: SearchBudget = DEFAULT_BUDGET,
                           cross_check: bool = True) -> frozenset[int]:
    """Intersection of all efficient zero forcing sets, cross-checked against
    the intersection of the termini of all efficient sets of forces when
    force-set enumeration is in budget."""
    report = analyze(g, budget)
    intersection = frozenset(report.eff_intersection)
    if cross_check and g.n <= budget.max_force_order:
        termini = [terminus(f) for f in efficient_force_sets(g, budget, report)]
        by_terminus = frozenset.intersection(*termini)
        if by_terminus != intersection:
            raise TheoremViolation(
                "intersection of Eff(G) equals intersection of efficient termini",
                report.graph6, f"{sorted(intersection)} != {sorted(by_terminus)}")
    return intersection


def verify_nonuniqueness(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    """|Eff(G)| >= 2 for a connected graph of order at least two."""
    if g.n < 2 or not is_connected(g):
        raise PreconditionError("needs a connected graph of order at least two")
    return len(analyze(g, budget).eff) >= 2


def idle_efficient_member(g: Graph, v: int, budget: SearchBudget = DEFAULT_BUDGET,
                          report: Optional[AnalysisReport] = None) -> Optional[ForceSet]:
    """An efficient set of forces whose base contains v and in which v
    performs no force, if one exists."""
    for f in efficient_force_sets(g, budget, report):
        if v in f.base and v not in f.sources:
            return f
    return None
