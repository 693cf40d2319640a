"""
Named graph families used as fixtures and by the `family` command.
"""

from typing import Callable

import networkx as nx

from errors import GraphArgumentError
from graphs import (
    PETERSEN_MATCHING,
    Graph,
    cartesian_product,
    disjoint_union,
    matching_graph,
)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphArgumentError(message)


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def edgeless(n: int) -> Graph:
    _require(n >= 1, f"edgeless graph needs n >= 1, got {n}")
    return Graph.edgeless(n)


def star(r: int) -> Graph:
    """K_{1,r} with center 0."""
    _require(r >= 1, f"star needs r >= 1, got {r}")
    return Graph.from_edges(r + 1, [(0, i) for i in range(1, r + 1)])


def generalized_star(e1: int, e2: int, e3: int) -> Graph:
    """S(e1, e2, e3): three arms of e1 <= e2 <= e3 vertices on a center.

    Vertex 0 is the center v. Arm i is numbered outward starting at w_i (the
    neighbor of v) and ending at the leaf u_i; a one-vertex arm is labelled
    'wi=ui'. Interior arm vertices are labelled 'ai_k' (k-th vertex from v).
    """
    _require(1 <= e1 <= e2 <= e3, f"generalized star needs 1 <= e1 <= e2 <= e3, got {e1},{e2},{e3}")
    labels = ["v"]
    edges = []
    nxt = 1
    for arm, length in enumerate((e1, e2, e3), start=1):
        prev = 0
        for k in range(1, length + 1):
            if length == 1:
                labels.append(f"w{arm}=u{arm}")
            elif k == 1:
                labels.append(f"w{arm}")
            elif k == length:
                labels.append(f"u{arm}")
            else:
                labels.append(f"a{arm}_{k}")
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges, labels)


def t_shaped(n: int) -> Graph:
    """S(1, 1, n-3)."""
    _require(n >= 4, f"T-shaped tree needs n >= 4, got {n}")
    return generalized_star(1, 1, n - 3)


def comb(k: int) -> Graph:
    """Path p1..pk (vertices 0..k-1) with leaf li (vertex k+i-1) on each pi."""
    _require(k >= 1, f"comb needs k >= 1, got {k}")
    edges = [(i, i + 1) for i in range(k - 1)] + [(i, k + i) for i in range(k)]
    labels = [f"p{i + 1}" for i in range(k)] + [f"l{i + 1}" for i in range(k)]
    return Graph.from_edges(2 * k, edges, labels)


def wheel5() -> Graph:
    """Hub a adjacent to every vertex of the 4-cycle b c d e."""
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]
    return Graph.from_edges(5, edges, ["a", "b", "c", "d", "e"])


def dart() -> Graph:
    """K4 minus the edge 0-1, with a pendant 4 on the degree-3 vertex 2."""
    edges = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4)]
    return Graph.from_edges(5, edges)


def k4_leaf() -> Graph:
    return Graph.from_edges(5, list(complete(4).edges) + [(0, 4)])


def hypercube(s: int) -> Graph:
    _require(s >= 1, f"hypercube needs s >= 1, got {s}")
    return Graph.from_networkx(nx.hypercube_graph(s))


def petersen() -> Graph:
    """(C5, C5, mu_P)."""
    return matching_graph(cycle(5), cycle(5), PETERSEN_MATCHING)


def path_plus_isolated(n: int) -> Graph:
    """P_{n-1} disjoint union P_1."""
    _require(n >= 2, f"P_(n-1) + P_1 needs n >= 2, got {n}")
    return disjoint_union(path(n - 1), path(1))


def star_prism(r: int) -> Graph:
    """K_{1,r} □ P_2."""
    return cartesian_product(star(r), path(2))


def prism(n: int) -> Graph:
    """K_n □ P_2."""
    return cartesian_product(complete(n), path(2))


FAMILIES: dict[str, tuple[Callable[..., Graph], int]] = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "edgeless": (edgeless, 1),
    "star": (star, 1),
    "genstar": (generalized_star, 3),
    "tshape": (t_shaped, 1),
    "comb": (comb, 1),
    "wheel5": (wheel5, 0),
    "dart": (dart, 0),
    "k4-leaf": (k4_leaf, 0),
    "hypercube": (hypercube, 1),
    "petersen": (petersen, 0),
    "path-isolated": (path_plus_isolated, 1),
    "star-prism": (star_prism, 1),
    "prism": (prism, 1),
}


def family(name: str, *params: int) -> Graph:
    """Build a named family member, e.g. family('genstar', 2, 5, 11)."""
    if name not in FAMILIES:
        raise GraphArgumentError(f"unknown family {name!r}; choose from {', '.join(sorted(FAMILIES))}")
    builder, arity = FAMILIES[name]
    if len(params) != arity:
        raise GraphArgumentError(f"family {name!r} takes {arity} parameter(s), got {len(params)}")
    return builder(*params)
