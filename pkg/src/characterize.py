"""
Structural recognizers and theorem verifiers for extreme propagation times,
propagation time one, trails and combs.

Every verifier computes the structural answer and the brute-force answer
independently and raises TheoremViolation when a proven implication between
them fails.
"""

import logging
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from errors import GraphArgumentError, PreconditionError, TheoremViolation
from families import comb, complete, generalized_star, star_prism
from forcing import (
    ForceSet,
    force_propagation_time,
    forcing_chains,
    is_propagating,
    propagate,
    record_forces,
)
from graphs import (
    Graph,
    MatchingSpec,
    basic_metrics,
    component_count,
    components,
    delete_vertex,
    encode_graph6,
    induced_subgraph,
    is_connected,
    is_path,
    is_tree,
    mask_of,
    matching_graph,
    popcount,
)
from reports import FamilyRow, FamilyTable
from search import DEFAULT_BUDGET, SearchBudget, analyze

logger = logging.getLogger(__name__)

COMB_EXACT_MAX_K = 8


def _violation(claim: str, g: Graph, detail: str = "") -> TheoremViolation:
    return TheoremViolation(claim, encode_graph6(g), detail)


def leaf_lower_bound(g: Graph) -> int:
    """ceil(leaves / 2): at most two leaves lie on one maximal forcing chain."""
    leaves = sum(1 for d in g.degrees() if d == 1)
    return math.ceil(leaves / 2)


def one_force_per_round(g: Graph, b: frozenset[int]) -> bool:
    trace = propagate(g, b)
    return trace.complete and all(len(r) == 1 for r in trace.rounds[1:])


# PROPAGATION TIME n-1 AND 0

@dataclass(frozen=True)
class TrivialExtremes:
    pt_is_nminus1: bool
    PT_is_nminus1: bool
    z_is_1: bool
    is_path: bool
    pt_is_0: bool
    PT_is_0: bool
    z_is_n: bool
    edgeless: bool


def classify_trivial_extremes(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> TrivialExtremes:
    if g.n == 0:
        raise GraphArgumentError("needs at least one vertex")
    report = analyze(g, budget)
    n = g.n
    result = TrivialExtremes(
        pt_is_nminus1=report.pt == n - 1,
        PT_is_nminus1=report.PT == n - 1,
        z_is_1=report.Z == 1,
        is_path=is_path(g),
        pt_is_0=report.pt == 0,
        PT_is_0=report.PT == 0,
        z_is_n=report.Z == n,
        edgeless=g.m == 0,
    )
    high = {result.pt_is_nminus1, result.PT_is_nminus1, result.z_is_1, result.is_path}
    if len(high) != 1:
        raise _violation("pt = n-1 <=> PT = n-1 <=> Z = 1 <=> path", g, str(result))
    low = {result.pt_is_0, result.PT_is_0, result.z_is_n, result.edgeless}
    if len(low) != 1:
        raise _violation("pt = 0 <=> PT = 0 <=> Z = n <=> edgeless", g, str(result))
    return result


# ZIGZAG GRAPHS

@dataclass(frozen=True)
class ZigzagDecomposition:
    """Two parallel paths in forcing order and the alternating path Q."""

    P1: tuple[int, ...]
    P2: tuple[int, ...]
    Q: tuple[int, ...]
    base: frozenset[int] = field(default=frozenset())

    @property
    def ell(self) -> int:
        return len(self.Q)

    def path(self, v: int) -> tuple[int, ...]:
        return self.P1 if v in self.P1 else self.P2

    def other_path(self, v: int) -> tuple[int, ...]:
        return self.P2 if v in self.P1 else self.P1

    def position(self, v: int) -> int:
        return self.path(v).index(v)

    def precedes(self, a: int, b: int) -> bool:
        return self.path(a) is self.path(b) and self.position(a) < self.position(b)

    def next(self, v: int) -> Optional[int]:
        p = self.path(v)
        i = p.index(v)
        return p[i + 1] if i + 1 < len(p) else None

    def prev(self, v: int) -> Optional[int]:
        p = self.path(v)
        i = p.index(v)
        return p[i - 1] if i > 0 else None


def zigzag_violations(g: Graph, zz: ZigzagDecomposition) -> list[str]:
    """Defining conditions of a zigzag graph that the decomposition fails."""
    problems = []
    if sorted(zz.P1 + zz.P2) != list(g.vertices):
        problems.append("P1 and P2 do not partition V")
        return problems
    for name, p in (("P1", zz.P1), ("P2", zz.P2)):
        sub, _ = induced_subgraph(g, p)
        if sub.m != len(p) - 1 or any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            problems.append(f"{name} is not an induced path in path order")
    q = zz.Q
    for j, z in enumerate(q):
        expected = zz.P1 if j % 2 == 0 else zz.P2
        if z not in expected:
            problems.append(f"z{j + 1} is on the wrong path")
    for j in range(len(q) - 2):
        if not zz.precedes(q[j], q[j + 2]):
            problems.append(f"z{j + 1} does not precede z{j + 3}")
    for a, b in zip(q, q[1:]):
        if not g.has_edge(a, b):
            problems.append(f"Q edge {a}-{b} missing")

    allowed = set()
    for p in (zz.P1, zz.P2, q):
        allowed.update(frozenset(e) for e in zip(p, p[1:]))
    for j in range(1, len(q) - 1):
        z = q[j]
        for w in zz.other_path(z):
            if g.has_edge(z, w) and zz.precedes(q[j - 1], w) and zz.precedes(w, q[j + 1]):
                allowed.add(frozenset((z, w)))
    for u, v in sorted(g.edges):
        if frozenset((u, v)) not in allowed:
            problems.append(f"edge {u}-{v} is not a path, Q, or permitted zigzag edge")
    return problems


def _decompose_from_base(g: Graph, base: frozenset[int]) -> Optional[ZigzagDecomposition]:
    forces = record_forces(g, base)
    trace = propagate(g, base)
    if len(trace.rounds) < 2:
        return None
    (first_forced,) = trace.rounds[1]
    zero = forces.source_of()[first_forced]
    (minus1,) = base - {zero}
    chains = {c[0]: c for c in forcing_chains(forces)}

    if g.degree(minus1) == 2 and g.n > 3:
        p1, p2 = chains[minus1], chains[zero]
        z1 = minus1
        candidates = [w for w in p2 if g.has_edge(minus1, w)]
        if not candidates:
            return None
        q = [z1, candidates[-1]]
    else:
        p1, p2 = chains[zero], chains[minus1]
        candidates = [w for w in p1 if g.has_edge(minus1, w)]
        if not candidates:
            return None
        q = [candidates[0], minus1]

    zz = ZigzagDecomposition(p1, p2, tuple(q), base)
    while True:
        z, before = q[-1], q[-2]
        other = zz.other_path(z)
        floor = other.index(before)
        ahead = [w for w in other[floor + 1:] if g.has_edge(z, w)]
        if not ahead:
            break
        q.append(ahead[-1])
    return ZigzagDecomposition(p1, p2, tuple(q), base)


def zigzag_decompositions(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> list[ZigzagDecomposition]:
    """One decomposition per minimum zero forcing set of size 2 that performs
    exactly one force per round, in lexicographic order of the sets."""
    report = analyze(g, budget)
    if report.Z != 2:
        return []
    found = []
    for base in report.min_zfs_sets():
        if one_force_per_round(g, base):
            zz = _decompose_from_base(g, base)
            if zz is not None:
                found.append(zz)
    return found


def zigzag_decompose(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> Optional[ZigzagDecomposition]:
    """Decompose a Z=2 graph along a minimum zero forcing set that performs
    exactly one force per round.

    The set's two maximal forcing chains are the parallel paths. With 0 the
    base vertex forcing at round 1 and -1 the other, Q starts at -1 when
    deg(-1) = 2 and |G| > 3, and otherwise at the earliest neighbor of -1 on
    the chain of 0; each later z is the latest neighbor of the previous z on
    the other chain.

    Two base vertices that can both force the first vertex leave the edge
    between them uncovered, so every qualifying set is tried. The first
    decomposition meeting every condition wins, then the first valid zigzag,
    then the first one found.
    """
    candidates = zigzag_decompositions(g, budget)
    if not candidates:
        return None

    def rank(zz: ZigzagDecomposition) -> tuple[bool, bool]:
        return not all(zigzag_conditions(g, zz).values()), bool(zigzag_violations(g, zz))

    return min(candidates, key=rank)


def zigzag_conditions(g: Graph, zz: ZigzagDecomposition) -> dict[str, bool]:
    """Conditions (b)-(e) for pt(G) = |G| - 2 on a zigzag graph."""
    q = zz.Q
    z1, z2 = q[0], q[1]
    n1, prev_last = zz.next(z1), zz.prev(q[-1])
    second_last = q[-2]
    return {
        "zigzag": not zigzag_violations(g, zz),
        "b_first_degrees": g.degree(zz.P1[0]) > 1 or g.degree(zz.P2[0]) > 1,
        "c_last_degrees": g.degree(zz.P1[-1]) > 1 or g.degree(zz.P2[-1]) > 1,
        "d_start": z2 != zz.P2[0] or (n1 is not None and g.has_edge(z2, n1)),
        "e_end": (second_last != zz.path(second_last)[-1]
                  or (prev_last is not None and g.has_edge(second_last, prev_last))),
    }


@dataclass(frozen=True)
class PtNMinus2Verdict:
    brute_force: bool
    structural: bool
    route: str
    reason: str = ""
    decomposition: Optional[ZigzagDecomposition] = None
    conditions: dict[str, bool] = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.brute_force == self.structural

    @property
    def exceptional(self) -> bool:
        """Structurally a qualifying zigzag graph but pt(G) < |G| - 2."""
        return self.route == "zigzag" and self.structural and not self.brute_force

    @property
    def verdict(self) -> bool:
        return self.brute_force


def decide_pt_nminus2(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> PtNMinus2Verdict:
    """Decide pt(G) = |G| - 2 structurally and by exhaustive search.

    Exceptional zigzag graphs (structural pass, search fail) are reported
    through `exceptional`. A search pass with a structural fail is a theorem
    violation.
    """
    if g.n == 0:
        raise GraphArgumentError("needs at least one vertex")
    brute = analyze(g, budget).pt == g.n - 2

    if not is_connected(g):
        comps = components(g)
        sizes = sorted(len(c) for c in comps)
        big = max(comps, key=len)
        structural = (len(comps) == 2 and sizes[0] == 1
                      and is_path(induced_subgraph(g, big)[0]))
        verdict = PtNMinus2Verdict(brute, structural, "disconnected",
                                   "P_(n-1) + P_1" if structural else "not P_(n-1) + P_1")
    elif is_tree(g):
        structural = g.n == 4 and sorted(g.degrees()) == [1, 1, 1, 3]
        verdict = PtNMinus2Verdict(brute, structural, "tree",
                                   "K_(1,3)" if structural else "tree other than K_(1,3)")
    else:
        zz = zigzag_decompose(g, budget)
        if zz is None:
            verdict = PtNMinus2Verdict(brute, False, "zigzag",
                                       "no minimum zero forcing set of size 2 with one force per round")
        else:
            conditions = zigzag_conditions(g, zz)
            failed = [name for name, ok in conditions.items() if not ok]
            verdict = PtNMinus2Verdict(brute, not failed, "zigzag",
                                       "failed: " + ", ".join(failed) if failed else "conditions (b)-(e) hold",
                                       zz, conditions)

    if verdict.brute_force and not verdict.structural:
        raise _violation("pt(G) = |G| - 2 characterization", g, verdict.reason)
    if verdict.exceptional:
        logger.info("exceptional zigzag graph %s", encode_graph6(g))
    return verdict


def decide_PT_nminus2_tree(t: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    """PT(T) = |T| - 2 iff T = S(1, 1, n-3)."""
    if not is_tree(t):
        raise GraphArgumentError("input is not a tree")
    degrees = t.degrees()
    structural = False
    if t.n >= 4 and degrees.count(3) == 1 and max(degrees) == 3:
        center = degrees.index(3)
        leaf_neighbors = sum(1 for w in t.neighbors(center) if degrees[w] == 1)
        structural = leaf_neighbors >= 2
    brute = analyze(t, budget).PT == t.n - 2
    if structural != brute:
        raise _violation("PT(T) = |T| - 2 iff T = S(1,1,n-3)", t, f"structural={structural}")
    return structural


# PROPAGATION TIME ONE

def find_matching_partition(g: Graph) -> Optional[tuple[tuple[int, ...], tuple[int, ...], MatchingSpec]]:
    """Split V into halves joined by a perfect matching, if possible.

    Returns (left, right, mu) with mu[i] the position in `right` of the
    partner of left[i].
    """
    n = g.n
    if n == 0 or n % 2:
        return None
    half = n // 2
    for rest in combinations(range(1, n), half - 1):
        left = (0,) + rest
        left_mask = mask_of(left)
        right = tuple(v for v in g.vertices if not left_mask >> v & 1)
        right_mask = g.full_mask & ~left_mask
        if all(popcount(g.adj[u] & right_mask) == 1 for u in left) and \
                all(popcount(g.adj[w] & left_mask) == 1 for w in right):
            position = {w: i for i, w in enumerate(right)}
            mu = tuple(position[(g.adj[u] & right_mask).bit_length() - 1] for u in left)
            return left, right, MatchingSpec(mu)
    return None


@dataclass(frozen=True)
class MatchingAnalysis:
    halves_Z: bool
    pt_is_1: bool
    is_matching_graph: bool
    partition: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    witness: Optional[MatchingSpec] = None


def pt1_matching_analysis(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> MatchingAnalysis:
    """|G| = 2Z(G), pt(G) = 1 and 'G is a matching graph', each decided on
    its own; any two must imply the third."""
    report = analyze(g, budget)
    halves = g.n == 2 * report.Z
    pt1 = report.pt == 1
    found = find_matching_partition(g)
    partition = witness = None

    if halves and pt1:
        b = report.eff_sets()[0]
        left = tuple(sorted(b))
        right = tuple(v for v in g.vertices if v not in b)
        right_mask = mask_of(right)
        position = {w: i for i, w in enumerate(right)}
        partners = []
        for u in left:
            across = g.adj[u] & right_mask
            if popcount(across) != 1:
                raise _violation("efficient set of half the order matches its complement", g,
                                 f"vertex {u} has {popcount(across)} neighbors outside B")
            partners.append(position[across.bit_length() - 1])
        partition, witness = (left, right), MatchingSpec(tuple(partners))
    elif found is not None:
        partition, witness = (found[0], found[1]), found[2]

    matching = found is not None
    if halves + pt1 + matching == 2:
        raise _violation("any two of |G|=2Z, pt=1, matching graph imply the third", g,
                         f"halves_Z={halves}, pt_is_1={pt1}, matching={matching}")
    return MatchingAnalysis(halves, pt1, matching, partition, witness)


def decide_matching_kn(h: Graph, mu: MatchingSpec, budget: SearchBudget = DEFAULT_BUDGET) -> bool:
    """pt((H, K_n, mu)) = 1 iff H is connected; returns connectivity of H."""
    g = matching_graph(h, complete(h.n), mu)
    connected = is_connected(h)
    pt1 = analyze(g, budget).pt == 1
    if pt1 != connected:
        raise _violation("pt((H, K_n, mu)) = 1 iff H connected", g, f"connected={connected}")
    return connected


def _component_cover_set(h1: Graph, h2: Graph, mu: MatchingSpec) -> Optional[tuple[set[int], set[int]]]:
    """A zero forcing set of size n-1 for (H1, H2, mu) built from a component
    of H1 whose image meets two components of H2. Returns the H1 part and
    the H2 part separately, or None when every component of H1 maps into a
    single component of H2."""
    where = {}
    for i, comp in enumerate(components(h2)):
        for w in comp:
            where[w] = i
    inverse = mu.inverse().mu
    for c1 in components(h1):
        for u, v in sorted(h1.edges):
            if u not in c1 or where[mu.mu[u]] == where[mu.mu[v]]:
                continue
            cv = {w for w in h2.vertices if where[w] == where[mu.mu[v]]}
            b1 = set(c1) - {inverse[w] for w in cv} - {u}
            b2 = set(h2.vertices) - {mu.mu[y] for y in b1} - {mu.mu[u]}
            return b1, b2
    return None


@dataclass(frozen=True)
class ComponentCheck:
    c1: int
    c2: int
    c: int
    pt: int
    smaller_zfs: Optional[frozenset[int]] = None

    @property
    def counts_equal(self) -> bool:
        return self.c1 == self.c2 == self.c


def component_necessity_check(h1: Graph, h2: Graph, mu: MatchingSpec,
                              budget: SearchBudget = DEFAULT_BUDGET) -> ComponentCheck:
    """pt((H1, H2, mu)) = 1 forces c(H1) = c(H2) = c((H1, H2, mu)); when the
    counts differ, a zero forcing set of size n-1 is exhibited."""
    g = matching_graph(h1, h2, mu)
    n = h1.n
    pt = analyze(g, budget).pt
    check = ComponentCheck(component_count(h1), component_count(h2), component_count(g), pt)
    if check.counts_equal:
        return check
    if pt == 1:
        raise _violation("pt = 1 implies equal component counts", g,
                         f"c(H1)={check.c1}, c(H2)={check.c2}, c={check.c}")

    parts = _component_cover_set(h1, h2, mu)
    if parts is not None:
        small = frozenset(parts[0]) | frozenset(w + n for w in parts[1])
    else:
        parts = _component_cover_set(h2, h1, mu.inverse())
        if parts is None:
            raise _violation("unequal component counts leave a component split by mu", g)
        small = frozenset(w + n for w in parts[0]) | frozenset(parts[1])
    if len(small) != n - 1 or not propagate(g, small).complete:
        raise _violation("component construction gives a zero forcing set of size n-1", g,
                         f"set {sorted(small)}")
    return ComponentCheck(check.c1, check.c2, check.c, pt, small)


@dataclass(frozen=True)
class VertexTest:
    vertex: int
    degree: int
    member: bool
    min_round_one_neighbors: int
    all_efficient_have_two: bool


def pt1_vertex_tests(g: Graph, budget: SearchBudget = DEFAULT_BUDGET) -> list[VertexTest]:
    """Per-vertex membership in the intersection of Eff(G) for pt(G) = 1,
    checked against |B^(1) ∩ N(v)| >= 2 and deg v >= 4 for members (both on
    connected graphs), and deg v > Z(G) implying membership."""
    report = analyze(g, budget)
    if report.pt != 1:
        raise PreconditionError(f"needs pt(G) = 1, got {report.pt}")
    connected = is_connected(g)
    intersection = set(report.eff_intersection)
    round_one = [propagate(g, b).rounds[1] for b in report.eff_sets()]
    tests = []
    for v in g.vertices:
        counts = [len(r & g.neighbors(v)) for r in round_one]
        test = VertexTest(v, g.degree(v), v in intersection, min(counts), all(c >= 2 for c in counts))
        if connected and test.member != test.all_efficient_have_two:
            raise _violation("v in every efficient set iff |B^(1) ∩ N(v)| >= 2 for all of them", g, f"v={v}")
        if connected and test.member and test.degree < 4:
            raise _violation("members of every efficient set have degree >= 4", g, f"v={v}")
        if test.degree > report.Z and not test.member:
            raise _violation("deg v > Z(G) puts v in every efficient set", g, f"v={v}")
        tests.append(test)
    return tests


@dataclass(frozen=True)
class PrimeSubgraph:
    graph: Graph
    base: frozenset[int]
    removed: frozenset[int]
    mapping: tuple[int, ...]


def prime_subgraph(g: Graph, b: frozenset[int], f: ForceSet,
                   budget: SearchBudget = DEFAULT_BUDGET) -> PrimeSubgraph:
    """G - S for S the members of B that perform no force in F."""
    report = analyze(g, budget)
    if report.pt != 1:
        raise PreconditionError(f"needs pt(G) = 1, got {report.pt}")
    b = frozenset(b)
    if b not in report.eff_sets():
        raise PreconditionError(f"{sorted(b)} is not an efficient zero forcing set")
    if f.base != b or force_propagation_time(g, f).pt != 1:
        raise PreconditionError("F is not an efficient set of forces of B")

    removed = b - f.sources
    sub, mapping = induced_subgraph(g, (v for v in g.vertices if v not in removed))
    index = {old: new for new, old in enumerate(mapping)}
    base = frozenset(index[v] for v in b - removed)
    complement = frozenset(sub.vertices) - base

    if sub.n != 2 * len(base):
        raise _violation("prime subgraph has twice as many vertices as its base", g)
    complement_mask, base_mask = mask_of(complement), mask_of(base)
    if any(popcount(sub.adj[v] & complement_mask) != 1 for v in base) or \
            any(popcount(sub.adj[w] & base_mask) != 1 for w in complement):
        raise _violation("prime subgraph is a matching graph", g)
    sub_report = analyze(sub, budget)
    if sub_report.pt != 1 or sub_report.Z != len(base):
        raise _violation("prime subgraph has pt = 1 and Z = |B'|", g)
    efficient = sub_report.eff_sets()
    if base not in efficient or complement not in efficient:
        raise _violation("B' and its complement are efficient for the prime subgraph", g)
    for v in removed:
        if analyze(delete_vertex(g, v)[0], budget).pt != 1:
            raise _violation("deleting a non-forcing efficient vertex keeps pt = 1", g, f"v={v}")
    return PrimeSubgraph(sub, base, removed, mapping)


# TRAILS AND DIAMETER

@dataclass(frozen=True)
class Trail:
    vertices: tuple[int, ...]
    round_index: dict[int, int]

    @property
    def length(self) -> int:
        return max(len(self.vertices) - 1, 0)

    def edges(self) -> list[frozenset[int]]:
        return [frozenset(e) for e in zip(self.vertices, self.vertices[1:])]


def build_trail(g: Graph, b: frozenset[int], f: Optional[ForceSet] = None) -> Trail:
    """A trail with a force of every round on it, walked back from the last
    round."""
    b = frozenset(b)
    f = f or record_forces(g, b)
    if f.base != b or not is_propagating(g, f):
        raise PreconditionError("F must be the propagating set of forces of B")
    trace = propagate(g, b)
    pt = trace.pt
    when = trace.round_of()
    source = f.source_of()
    if pt == 0:
        return Trail((min(b),) if b else (), {})

    last = min(trace.rounds[pt])
    head = source[last]
    walk = [last, head]
    for t in range(pt, 1, -1):
        if when[head] == t - 1:
            head = source[head]
            walk.append(head)
        else:
            earlier = sorted(x for x in g.neighbors(head) if when[x] == t - 1)
            if not earlier:
                raise _violation("a vertex forcing late has a neighbor forced one round before", g,
                                 f"vertex {head} at round {t}")
            x = earlier[0]
            head = source[x]
            walk.extend((x, head))
    walk.reverse()

    forces = f.forces
    round_index = {}
    for i, (u, v) in enumerate(zip(walk, walk[1:])):
        if (u, v) in forces and when[v] not in round_index:
            round_index[when[v]] = i
    trail = Trail(tuple(walk), round_index)

    edges = trail.edges()
    if any(len(e) != 2 or not g.has_edge(*e) for e in edges):
        raise _violation("trail follows edges of G", g, str(walk))
    if len(set(edges)) != len(edges):
        raise _violation("trail repeats no edge", g, str(walk))
    if trail.length < pt or set(round_index) != set(range(1, pt + 1)):
        raise _violation("trail carries a force of every round", g, str(walk))
    return trail


@dataclass(frozen=True)
class CombReport:
    k: int
    n: int
    diameter: int
    prescribed: tuple[str, ...]
    prescribed_pt: int
    leaf_bound: int
    exact: bool
    Z: Optional[int] = None
    pt: Optional[int] = None


def comb_prescribed_set(g: Graph, k: int) -> frozenset[int]:
    """Leaves whose number (1-based, in path order) is 2 or 3 mod 4."""
    return frozenset(k + i - 1 for i in range(1, k + 1) if i % 4 in (2, 3))


def comb_analysis(k: int, budget: SearchBudget = DEFAULT_BUDGET) -> CombReport:
    if k < 4 or k % 4:
        raise GraphArgumentError(f"comb analysis needs k a positive multiple of 4, got {k}")
    g = comb(k)
    b = comb_prescribed_set(g, k)
    pt_b = propagate(g, b).pt
    diameter = basic_metrics(g).diameter
    bound = leaf_lower_bound(g)
    if pt_b != 3:
        raise _violation("prescribed comb set forces in 3 rounds", g, f"pt={pt_b}")
    if len(b) != k // 2 or bound != k // 2:
        raise _violation("prescribed comb set meets the leaf bound", g)
    if diameter != k + 1:
        raise _violation("comb diameter is k+1", g, f"diam={diameter}")

    exact = k <= COMB_EXACT_MAX_K
    z = pt = None
    if exact:
        report = analyze(g, budget)
        z, pt = report.Z, report.pt
        if z != k // 2 or pt != 3:
            raise _violation("comb has Z = k/2 and pt = 3", g, f"Z={z}, pt={pt}")
    return CombReport(k, g.n, int(diameter), tuple(g.label(v) for v in sorted(b)),
                      pt_b, bound, exact, z, pt)


@dataclass(frozen=True)
class StarPrismReport:
    r: int
    Z: int
    pt: int
    PT: int


def star_prism_check(r: int, budget: SearchBudget = DEFAULT_BUDGET) -> StarPrismReport:
    """K_(1,r) □ P_2 has Z = r and pt >= 2; the exact pt is only reported."""
    if r < 2:
        raise GraphArgumentError(f"star prism check needs r >= 2, got {r}")
    g = star_prism(r)
    report = analyze(g, budget)
    if report.Z != r or report.pt < 2:
        raise _violation("Z(K_(1,r) □ P_2) = r with pt >= 2", g, f"Z={report.Z}, pt={report.pt}")
    return StarPrismReport(r, report.Z, report.pt, report.PT)


# GENERALIZED STARS

# minimum zero forcing sets of S(e1, e2, e3) by arm label, with pt in closed
# form for 1 < e1 < e2 < e3
GENSTAR_ROWS: list[tuple[tuple[str, str], Callable[[int, int, int], int]]] = [
    (("u1", "u2"), lambda e1, e2, e3: e2 + e3 - 1),
    (("u3", "w2"), lambda e1, e2, e3: e2 + e3 - 1),
    (("u3", "w1"), lambda e1, e2, e3: e2 + e3),
    (("u1", "u3"), lambda e1, e2, e3: e2 + e3 - 1),
    (("u2", "w3"), lambda e1, e2, e3: e2 + e3 - 1),
    (("u2", "w1"), lambda e1, e2, e3: e2 + e3),
    (("u2", "u3"), lambda e1, e2, e3: e1 + e3 - 1),
    (("u1", "w3"), lambda e1, e2, e3: e1 + e3 - 1),
    (("u1", "w2"), lambda e1, e2, e3: e1 + e3),
]


def generalized_star_table(e1: int, e2: int, e3: int,
                           budget: SearchBudget = DEFAULT_BUDGET) -> FamilyTable:
    g = generalized_star(e1, e2, e3)
    report = analyze(g, budget)
    strict = 1 < e1 < e2 < e3
    rows = []
    for names, formula in GENSTAR_ROWS:
        b = g.vertex_set(names)
        pt = propagate(g, b).pt
        if len(b) != report.Z or pt is None:
            raise _violation("labelled generalized-star set is a minimum zero forcing set", g, "".join(names))
        predicted = formula(e1, e2, e3) if strict else None
        if predicted is not None and pt != predicted:
            raise _violation("generalized-star closed form", g, f"{''.join(names)}: {pt} != {predicted}")
        rows.append(FamilyRow(zero_forcing_set=list(names), pt=pt, predicted=predicted))
    return FamilyTable(family="genstar", params=[e1, e2, e3], analysis=report, rows=rows)
