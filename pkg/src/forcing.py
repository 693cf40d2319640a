"""
The color-change engine: synchronous propagation rounds, recorded sets of
forces, their replay, terminus, reversal, forcing chains and Q_t sets.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from errors import GraphArgumentError, InvalidForceSetError, NotForcingError, TheoremViolation
from graphs import Graph, encode_graph6, mask_of, members

logger = logging.getLogger(__name__)

Force = tuple[int, int]
TieBreak = Callable[[int, list[int]], int]


def smallest_source(target: int, candidates: list[int]) -> int:
    return min(candidates)


# TRACES

@dataclass(frozen=True)
class ColorState:
    black: frozenset[int]
    round: int


@dataclass(frozen=True)
class PropagationTrace:
    """Rounds B^(0), B^(1), ... of the synchronous color-change process."""

    rounds: tuple[frozenset[int], ...]
    complete: bool

    @property
    def pt(self) -> Optional[int]:
        return len(self.rounds) - 1 if self.complete else None

    def colored_by(self, t: int) -> frozenset[int]:
        """Union of rounds 0..t."""
        out: set[int] = set()
        for r in self.rounds[:t + 1]:
            out |= r
        return frozenset(out)

    def state(self, t: int) -> ColorState:
        return ColorState(self.colored_by(t), t)

    def round_of(self) -> dict[int, int]:
        return {v: t for t, r in enumerate(self.rounds) for v in r}


@dataclass(frozen=True)
class ForceTrace:
    """Rounds F^(0), F^(1), ... when every vertex may only be forced by its
    designated source."""

    rounds: tuple[frozenset[int], ...]

    @property
    def pt(self) -> int:
        return len(self.rounds) - 1

    def colored_by(self, t: int) -> frozenset[int]:
        out: set[int] = set()
        for r in self.rounds[:t + 1]:
            out |= r
        return frozenset(out)

    def round_of(self) -> dict[int, int]:
        return {v: t for t, r in enumerate(self.rounds) for v in r}


# PROPAGATION

def propagation_rounds(adj: tuple[int, ...], start: int) -> list[int]:
    """Round masks of the synchronous process from the bitmask `start`.

    The last entry is the final nonempty round; the final coloring is the
    OR of all entries.
    """
    rounds = [start]
    black = start
    active = start
    while True:
        new = 0
        still_active = 0
        for v in members(active):
            white = adj[v] & ~black
            if not white:
                continue
            still_active |= 1 << v
            if white & (white - 1) == 0:
                new |= white
        if not new:
            return rounds
        rounds.append(new)
        black |= new
        active = still_active | new


def propagation_time_of_mask(g: Graph, start: int) -> Optional[int]:
    """pt(G, B) for a bitmask B, or None when B is not zero forcing."""
    rounds = propagation_rounds(g.adj, start)
    final = 0
    for r in rounds:
        final |= r
    if final != g.full_mask:
        return None
    return len(rounds) - 1


def propagate(g: Graph, b: Iterable[int]) -> PropagationTrace:
    start = mask_of(b)
    if start & ~g.full_mask:
        raise GraphArgumentError(f"initial set {sorted(members(start))} is not inside V(G)")
    rounds = propagation_rounds(g.adj, start)
    final = 0
    for r in rounds:
        final |= r
    return PropagationTrace(tuple(frozenset(members(r)) for r in rounds), final == g.full_mask)


def is_zero_forcing_set(g: Graph, b: Iterable[int]) -> bool:
    return propagate(g, b).complete


def final_coloring(g: Graph, b: Iterable[int]) -> frozenset[int]:
    trace = propagate(g, b)
    return trace.colored_by(len(trace.rounds))


# SETS OF FORCES

@dataclass(frozen=True)
class ForceSet:
    """A zero forcing set together with an unordered set of forces."""

    base: frozenset[int]
    forces: frozenset[Force]

    @property
    def vertices(self) -> frozenset[int]:
        return self.base | {t for _, t in self.forces}

    @property
    def sources(self) -> frozenset[int]:
        return frozenset(s for s, _ in self.forces)

    def source_of(self) -> dict[int, int]:
        return {t: s for s, t in self.forces}

    def target_of(self) -> dict[int, int]:
        return {s: t for s, t in self.forces}

    def to_dict(self) -> dict:
        return {"base": sorted(self.base), "forces": [list(f) for f in sorted(self.forces)]}

    @classmethod
    def from_dict(cls, data: dict) -> "ForceSet":
        return cls(frozenset(data["base"]), frozenset((int(s), int(t)) for s, t in data["forces"]))


def replay(g: Graph, f: ForceSet) -> list[Force]:
    """Validate F against G and return one chronological list of its forces.

    Raises InvalidForceSetError naming the first force that can never fire.
    """
    for v in f.base:
        if not 0 <= v < g.n:
            raise InvalidForceSetError(f"base vertex {v} out of range")
    targets = [t for _, t in f.forces]
    if len(set(targets)) != len(targets):
        raise InvalidForceSetError("a vertex is forced more than once")
    if len(f.sources) != len(f.forces):
        raise InvalidForceSetError("a vertex performs more than one force")
    if set(targets) != set(g.vertices) - f.base:
        raise InvalidForceSetError("forced vertices are not exactly V minus the base")
    for s, t in sorted(f.forces):
        if not g.has_edge(s, t):
            raise InvalidForceSetError("force along a non-edge", (s, t))

    black = mask_of(f.base)
    pending = sorted(f.forces)
    order: list[Force] = []
    while pending:
        fired = []
        for s, t in pending:
            if black >> s & 1 and g.adj[s] & ~black == 1 << t:
                fired.append((s, t))
        if not fired:
            raise InvalidForceSetError("force can never fire", pending[0])
        # simultaneously legal forces have distinct targets and never interfere
        for s, t in fired:
            black |= 1 << t
            order.append((s, t))
        pending = [p for p in pending if p not in fired]
    return order


def is_valid_force_set(g: Graph, f: ForceSet) -> bool:
    try:
        replay(g, f)
    except InvalidForceSetError:
        return False
    return True


def record_forces(g: Graph, b: Iterable[int], tie_break: TieBreak = smallest_source) -> ForceSet:
    """Record the forces of the synchronous process from B; every force fires
    at the earliest round possible and tie_break picks among competing
    sources."""
    base = frozenset(b)
    black = mask_of(base)
    forces = set()
    while True:
        candidates: dict[int, list[int]] = {}
        for v in members(black):
            white = g.adj[v] & ~black
            if white and white & (white - 1) == 0:
                candidates.setdefault(white.bit_length() - 1, []).append(v)
        if not candidates:
            break
        for w, sources in candidates.items():
            forces.add((tie_break(w, sorted(sources)), w))
            black |= 1 << w
    if black != g.full_mask:
        raise NotForcingError(f"{sorted(base)} is not a zero forcing set")
    return ForceSet(base, frozenset(forces))


def force_propagation_time(g: Graph, f: ForceSet) -> ForceTrace:
    """The rounds F^(t) of a valid set of forces."""
    replay(g, f)
    black = mask_of(f.base)
    rounds = [f.base]
    pending = set(f.forces)
    while pending:
        fired = {(s, t) for s, t in pending
                 if black >> s & 1 and g.adj[s] & ~black == 1 << t}
        # replay() has already shown every force eventually fires
        assert fired
        rounds.append(frozenset(t for _, t in fired))
        for _, t in fired:
            black |= 1 << t
        pending -= fired
    return ForceTrace(tuple(rounds))


def is_propagating(g: Graph, f: ForceSet) -> bool:
    """True when F forces every vertex in the same round as the synchronous
    process for F.base does."""
    return force_propagation_time(g, f).rounds == propagate(g, f.base).rounds


def terminus(f: ForceSet) -> frozenset[int]:
    return f.vertices - f.sources


def reverse(f: ForceSet) -> ForceSet:
    return ForceSet(terminus(f), frozenset((t, s) for s, t in f.forces))


def forcing_chains(f: ForceSet) -> list[tuple[int, ...]]:
    """Maximal forcing chains, one per base vertex, in base order."""
    nxt = f.target_of()
    chains = []
    for b in sorted(f.base):
        chain = [b]
        while chain[-1] in nxt:
            chain.append(nxt[chain[-1]])
        chains.append(tuple(chain))
    return chains


def q_sets(g: Graph, f: ForceSet, check: bool = True) -> list[frozenset[int]]:
    """Q_0(F), ..., Q_pt(F) computed from the canonical rounds of F.

    With check=True, Q_t(F) is verified to lie in the first t+1 rounds of
    Rev(F).
    """
    trace = force_propagation_time(g, f)
    pt = trace.pt
    source = f.source_of()
    out = [terminus(f)]
    for t in range(1, pt + 1):
        out.append(frozenset(source[w] for w in trace.rounds[pt - t + 1]))
    if check:
        rev_trace = force_propagation_time(g, reverse(f))
        for t, q in enumerate(out):
            if not q <= rev_trace.colored_by(t):
                raise TheoremViolation(
                    "Q_t(F) inside the first t rounds of Rev(F)", encode_graph6(g),
                    f"t={t}, Q_t={sorted(q)}")
    return out
