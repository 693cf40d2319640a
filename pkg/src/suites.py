"""
Theorem suites for corpus verification.

Each suite check takes a graph and a budget and returns None when the suite
does not apply, or a (possibly empty) detail dict when it passed. Failing
claims raise TheoremViolation; over-budget graphs raise BudgetExceededError
and are counted as skipped.
"""

import json
import logging
from dataclasses import dataclass
from itertools import permutations
from pathlib import Path
from typing import Callable, Optional

from characterize import (
    build_trail,
    classify_trivial_extremes,
    component_necessity_check,
    decide_matching_kn,
    decide_pt_nminus2,
    decide_PT_nminus2_tree,
    leaf_lower_bound,
    one_force_per_round,
    prime_subgraph,
    pt1_matching_analysis,
    pt1_vertex_tests,
)
from constants import EXCEPTIONS_FILE, EXCEPTIONS_SIDECAR, MAX_ORDER_MATCHING_SWEEP, SUITE_NAMES
from errors import BudgetExceededError, GraphArgumentError, InvalidForceSetError, TheoremViolation, ZeroForcingError
from families import complete
from forcing import force_propagation_time, reverse, terminus
from graphs import Graph, MatchingSpec, basic_metrics, delete_vertex, encode_graph6, is_connected, is_tree, parse_graph6
from reports import SuiteResult, SuiteSummary
from search import (
    SearchBudget,
    analyze,
    efficient_force_sets,
    efficient_intersection,
    enumerate_force_sets,
    idle_efficient_member,
)
from utils import run_batch

logger = logging.getLogger(__name__)

Detail = Optional[dict]


def _violation(claim: str, g: Graph, detail: str = "") -> TheoremViolation:
    return TheoremViolation(claim, encode_graph6(g), detail)


def _require_force_budget(g: Graph, budget: SearchBudget) -> None:
    if g.n > budget.max_force_order:
        raise BudgetExceededError("force-set enumeration order", budget.max_force_order, g.n)


def check_bounds(g: Graph, budget: SearchBudget) -> Detail:
    report = analyze(g, budget)
    if report.pd == 0 and g.n >= 2 and is_connected(g) and report.eff_intersection:
        raise _violation("pd(G) = 0 leaves no vertex in every efficient set", g,
                         f"intersection {report.eff_intersection}")
    return {}


def check_extremes(g: Graph, budget: SearchBudget) -> Detail:
    classify_trivial_extremes(g, budget)
    return {}


def check_nonuniqueness(g: Graph, budget: SearchBudget) -> Detail:
    if g.n < 2 or not is_connected(g):
        return None
    report = analyze(g, budget)
    if len(report.eff) < 2:
        raise _violation("|Eff(G)| >= 2", g)
    return {}


def check_reversal(g: Graph, budget: SearchBudget) -> Detail:
    if not is_connected(g):
        return None
    _require_force_budget(g, budget)
    report = analyze(g, budget)
    efficient = set(report.eff_sets())
    reached = set()
    for b in report.min_zfs_sets():
        for f in enumerate_force_sets(g, b, budget):
            pt_f = force_propagation_time(g, f).pt
            try:
                pt_rev = force_propagation_time(g, reverse(f)).pt
            except InvalidForceSetError as e:
                raise _violation("the reversal of a set of forces is a set of forces", g, str(e)) from e
            if pt_rev > pt_f:
                raise _violation("pt(G, Rev(F)) <= pt(G, F)", g, f"{pt_rev} > {pt_f}")
            if b in efficient and pt_f == report.pt:
                if pt_rev != report.pt or terminus(f) not in efficient:
                    raise _violation("Rev(F) is efficient and Term(F) is in Eff(G)", g, str(f.to_dict()))
                reached.add(terminus(f))
    if reached != efficient:
        missing = sorted(sorted(b) for b in efficient - reached)
        raise _violation("every efficient set is the terminus of an efficient set of forces", g, str(missing))
    return {}


def check_intersection(g: Graph, budget: SearchBudget) -> Detail:
    if not is_connected(g):
        return None
    _require_force_budget(g, budget)
    efficient_intersection(g, budget, cross_check=True)
    return {}


def check_deletion(g: Graph, budget: SearchBudget) -> Detail:
    if g.n < 2 or not is_connected(g):
        return None
    _require_force_budget(g, budget)
    report = analyze(g, budget)
    for v in g.vertices:
        idle = idle_efficient_member(g, v, budget, report) is not None
        smaller = analyze(delete_vertex(g, v)[0], budget)
        keeps = smaller.pt == report.pt and smaller.Z == report.Z - 1
        if idle != keeps:
            raise _violation("v idles in an efficient set of forces iff pt(G-v) = pt(G) and Z(G-v) = Z(G)-1",
                             g, f"v={v}, idle={idle}")
    return {}


def check_zigzag(g: Graph, budget: SearchBudget) -> Detail:
    report = analyze(g, budget)
    if report.Z != 2:
        return None
    n = g.n
    pt_high, PT_high = report.pt == n - 2, report.PT == n - 2
    single = [one_force_per_round(g, b) for b in report.min_zfs_sets()]
    if pt_high and not PT_high:
        raise _violation("pt = n-2 implies PT = n-2", g)
    if pt_high != all(single):
        raise _violation("pt = n-2 iff every minimum zero forcing set forces once per round", g)
    if PT_high != any(single):
        raise _violation("PT = n-2 iff some minimum zero forcing set forces once per round", g)

    verdict = decide_pt_nminus2(g, budget)
    if not is_connected(g) and not (verdict.structural == pt_high == PT_high):
        raise _violation("disconnected: pt = n-2 iff PT = n-2 iff P_(n-1) + P_1", g)
    if is_tree(g):
        decide_PT_nminus2_tree(g, budget)
    if verdict.exceptional:
        return {"exception": {"graph6": encode_graph6(g), "n": n,
                              "structural_pass": verdict.structural, "brute_pt": report.pt}}
    return {}


def check_matching(g: Graph, budget: SearchBudget) -> Detail:
    if not is_connected(g):
        return None
    pt1_matching_analysis(g, budget)
    return {}


def check_kn_matching(g: Graph, budget: SearchBudget) -> Detail:
    if g.n > MAX_ORDER_MATCHING_SWEEP:
        raise BudgetExceededError("matching sweep order", MAX_ORDER_MATCHING_SWEEP, g.n)
    kn = complete(g.n)
    for mu in permutations(range(g.n)):
        spec = MatchingSpec(mu)
        decide_matching_kn(g, spec, budget)
        component_necessity_check(g, kn, spec, budget)
    return {}


def check_vertex(g: Graph, budget: SearchBudget) -> Detail:
    if analyze(g, budget).pt != 1:
        return None
    pt1_vertex_tests(g, budget)
    return {}


def check_prime(g: Graph, budget: SearchBudget) -> Detail:
    report = analyze(g, budget)
    if report.pt != 1:
        return None
    _require_force_budget(g, budget)
    for f in efficient_force_sets(g, budget, report):
        prime_subgraph(g, f.base, f, budget)
    return {}


def check_trail(g: Graph, budget: SearchBudget) -> Detail:
    if not is_connected(g):
        return None
    tree = is_tree(g)
    diameter = basic_metrics(g).diameter
    for b in analyze(g, budget).min_zfs_sets():
        trail = build_trail(g, b)
        if tree and (len(set(trail.vertices)) != len(trail.vertices) or trail.length > diameter):
            raise _violation("trails in a tree are paths no longer than the diameter", g, str(trail.vertices))
    return {}


def check_tree(g: Graph, budget: SearchBudget) -> Detail:
    if not is_tree(g):
        return None
    report = analyze(g, budget)
    diameter = basic_metrics(g).diameter
    if report.PT > diameter:
        raise _violation("PT(T) <= diam(T)", g, f"PT={report.PT}, diam={diameter}")
    if report.Z < leaf_lower_bound(g):
        raise _violation("Z(G) >= ceil(leaves / 2)", g)
    return {}


@dataclass(frozen=True)
class Suite:
    name: str
    claim: str
    check: Callable[[Graph, SearchBudget], Detail]


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("bounds", "(n-Z)/Z <= pt <= PT <= n-Z; pd = 0 empties the efficient intersection", check_bounds),
    Suite("extremes", "pt = n-1 iff PT = n-1 iff Z = 1 iff path; pt = 0 iff edgeless", check_extremes),
    Suite("nonuniqueness", "|Eff(G)| >= 2 for connected G", check_nonuniqueness),
    Suite("reversal", "reversal never slows forcing and preserves efficiency", check_reversal),
    Suite("intersection", "efficient sets and efficient termini share one intersection", check_intersection),
    Suite("deletion", "vertex-deletion criterion for idle efficient vertices", check_deletion),
    Suite("zigzag", "pt = n-2 characterization for Z = 2", check_zigzag),
    Suite("matching", "two of |G| = 2Z, pt = 1, matching graph imply the third", check_matching),
    Suite("kn-matching", "pt((H, K_n, mu)) = 1 iff H connected; equal component counts", check_kn_matching),
    Suite("vertex", "membership in every efficient set for pt = 1", check_vertex),
    Suite("prime", "prime subgraphs are matching graphs of order 2|B'|", check_prime),
    Suite("trail", "a trail carries one force of every round", check_trail),
    Suite("tree", "PT(T) <= diam(T) and the leaf bound", check_tree),
]}

assert list(SUITES) == SUITE_NAMES


def resolve_suites(names: Optional[list[str]]) -> list[str]:
    if not names or names == ["all"]:
        return list(SUITE_NAMES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise GraphArgumentError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITE_NAMES)}")
    return [n for n in SUITE_NAMES if n in names]


def verify_graph(job: tuple[str, list[str], SearchBudget]) -> list[tuple[str, str, dict]]:
    """Run the selected suites on one graph6 record.

    Returns (suite, status, detail) triples with status one of passed,
    n/a, skipped or violation.
    """
    g6, names, budget = job
    g = parse_graph6(g6)
    outcomes = []
    for name in names:
        try:
            detail = SUITES[name].check(g, budget)
        except BudgetExceededError as e:
            logger.debug("%s skipped on %s: %s", name, g6, e)
            outcomes.append((name, "skipped", {"reason": str(e)}))
        except TheoremViolation as e:
            outcomes.append((name, "violation", _failure(g, e)))
        else:
            outcomes.append((name, "n/a" if detail is None else "passed", detail or {}))
    return outcomes


def _failure(g: Graph, e: TheoremViolation) -> dict:
    failure = {"graph6": e.graph6, "claim": e.claim, "detail": e.detail, "report": None}
    try:
        failure["report"] = analyze(g).model_dump()
    except ZeroForcingError:
        pass
    return failure


def run_suites(graphs: list[Graph], names: Optional[list[str]], budget: SearchBudget,
               corpus: str = "<input>", jobs: int = 1, quiet: bool = True) -> SuiteSummary:
    """Run suites over a corpus and fold the per-graph outcomes, in corpus
    order, into one summary."""
    selected = resolve_suites(names)
    jobs_in = [(encode_graph6(g), selected, budget) for g in graphs]
    per_graph = run_batch(jobs_in, verify_graph, jobs=jobs, quiet=quiet,
                          get_item_name=lambda job: job[0], description="Verifying")

    results = {name: SuiteResult(suite=name) for name in selected}
    exceptions: dict[str, dict] = {}
    for outcomes in per_graph:
        for name, status, detail in outcomes:
            result = results[name]
            if status == "skipped":
                result.skipped += 1
                continue
            if status == "n/a":
                continue
            result.checked += 1
            if status == "violation":
                result.violations += 1
                result.failures.append(detail)
                logger.error("%s violated on %s: %s", detail["claim"], detail["graph6"], detail["detail"])
            else:
                result.passed += 1
                if "exception" in detail:
                    exceptions[detail["exception"]["graph6"]] = detail["exception"]

    ordered = sorted(exceptions.values(), key=lambda e: (e["n"], e["graph6"]))
    return SuiteSummary(corpus=corpus, graphs=len(graphs), suites=list(results.values()),
                        exception_records=ordered)


def write_exceptions(summary: SuiteSummary, directory: str = ".") -> tuple[Path, Path]:
    """The exceptional zigzag graphs as graph6 lines plus a JSON sidecar."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    g6_path, sidecar_path = out / EXCEPTIONS_FILE, out / EXCEPTIONS_SIDECAR
    g6_path.write_text("".join(g6 + "\n" for g6 in summary.exceptions))
    sidecar_path.write_text(json.dumps(summary.exception_records, indent=2) + "\n")
    logger.info("wrote %d exceptional graphs to %s", len(summary.exceptions), g6_path)
    return g6_path, sidecar_path
