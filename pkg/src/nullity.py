"""
Exact-rational maximum-nullity witnesses for graphs built by repeated
products with P_2.

Matrices hold Fraction entries in numpy object arrays; rank is computed by
fraction-free elimination on integerized rows.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from errors import BudgetExceededError, GraphArgumentError, TheoremViolation, WitnessError
from families import complete, path
from forcing import propagate
from graphs import Graph, MatchingSpec, encode_graph6, matching_graph
from reports import Certificate
from search import DEFAULT_BUDGET, SearchBudget, analyze

logger = logging.getLogger(__name__)

# (3/5)^2 + (4/5)^2 = 1 keeps the next involution rational
_COS, _SIN = Fraction(3, 5), Fraction(4, 5)

WITNESS_FAMILIES = ("Kn", "P2")


@dataclass(frozen=True, eq=False)
class RationalMatrix:
    entries: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.entries, dtype=object)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise GraphArgumentError(f"matrix must be square, got shape {a.shape}")
        object.__setattr__(self, "entries", np.vectorize(Fraction, otypes=[object])(a) if a.size else a)

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence]) -> "RationalMatrix":
        return cls(np.array([list(r) for r in rows], dtype=object))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[Fraction(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[Fraction(1)] * n for _ in range(n)])

    @classmethod
    def block(cls, a: "RationalMatrix", b: "RationalMatrix",
              c: "RationalMatrix", d: "RationalMatrix") -> "RationalMatrix":
        return cls(np.block([[a.entries, b.entries], [c.entries, d.entries]]))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(self.entries + other.entries)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(self.entries - other.entries)

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(-self.entries)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(self.entries.dot(other.entries))

    def scaled(self, c) -> "RationalMatrix":
        return RationalMatrix(self.entries * Fraction(c))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries.shape == other.entries.shape and bool(np.all(self.entries == other.entries))

    __hash__ = None

    def is_symmetric(self) -> bool:
        return bool(np.all(self.entries == self.entries.T))

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def to_strings(self) -> list[list[str]]:
        return [[f"{x.numerator}/{x.denominator}" for x in row] for row in self.entries]


def conforms(a: RationalMatrix, g: Graph) -> bool:
    """Off-diagonal entry (i, j) is nonzero exactly when ij is an edge."""
    if a.dim != g.n:
        raise GraphArgumentError(f"matrix of dimension {a.dim} against a graph of order {g.n}")
    for i in range(g.n):
        for j in range(g.n):
            if i != j and (a.entries[i, j] != 0) != g.has_edge(i, j):
                return False
    return True


def _integer_rows(a: RationalMatrix) -> list[list[int]]:
    out = []
    for row in a.entries:
        scale = math.lcm(*(x.denominator for x in row)) if len(row) else 1
        out.append([int(x * scale) for x in row])
    return out


def rank(a: RationalMatrix) -> int:
    """Rank by Bareiss elimination; every division is exact."""
    m = _integer_rows(a)
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    r, prev = 0, 1
    for col in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        for i in range(r + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (m[i][j] * p - m[i][col] * m[r][j]) // prev
            m[i][col] = 0
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def nullity(a: RationalMatrix) -> int:
    return a.dim - rank(a)


def base_graph(name: str, n: int = 2) -> Graph:
    if name == "Kn":
        if n < 2:
            raise GraphArgumentError(f"K_n witness needs n >= 2, got {n}")
        return complete(n)
    if name == "P2":
        return path(2)
    raise GraphArgumentError(f"unsupported witness family {name!r}; choose from {', '.join(WITNESS_FAMILIES)}")


def involution_witness(name: str, n: int = 2) -> RationalMatrix:
    """L in S(G) with L^2 = I: I - (2/n)J for K_n, the swap for P_2."""
    g = base_graph(name, n)
    if name == "Kn":
        l = RationalMatrix.identity(n) - RationalMatrix.ones(n).scaled(Fraction(2, n))
    else:
        l = RationalMatrix.from_rows([[0, 1], [1, 0]])
    if l @ l != RationalMatrix.identity(g.n) or not conforms(l, g):
        raise WitnessError(f"{name} witness is not an involution in S(G)")
    return l


@dataclass(frozen=True)
class HatStep:
    H: RationalMatrix
    M_unscaled: RationalMatrix
    next_involution: RationalMatrix
    graph: Graph


def hat_step(l: RationalMatrix, g: Graph) -> HatStep:
    """Lift an involution L in S(G) to G □ P_2.

    G □ P_2 is laid out as two copies of G (0..n-1 and n..2n-1) matched by
    the identity. H = [[L, I], [I, L]] has nullity n and M = [[L, I], [I, -L]]
    satisfies M^2 = 2I. The involution handed to the next step is
    [[cL, sI], [sI, -cL]] with c^2 + s^2 = 1.
    """
    n = g.n
    eye = RationalMatrix.identity(n)
    if l.dim != n or not conforms(l, g):
        raise WitnessError("L does not conform to G")
    if not l.is_symmetric():
        raise WitnessError("L is not symmetric")
    if l @ l != eye:
        raise WitnessError("L^2 != I")

    nxt = matching_graph(g, g, MatchingSpec.identity(n))
    h = RationalMatrix.block(l, eye, eye, l)
    m = RationalMatrix.block(l, eye, eye, -l)
    following = RationalMatrix.block(l.scaled(_COS), eye.scaled(_SIN), eye.scaled(_SIN), l.scaled(-_COS))

    g6 = encode_graph6(nxt)
    if not conforms(h, nxt) or not conforms(m, nxt) or not conforms(following, nxt):
        raise TheoremViolation("hat-step matrices lie in S(G □ P_2)", g6)
    if not (h.is_symmetric() and m.is_symmetric() and following.is_symmetric()):
        raise TheoremViolation("hat-step preserves symmetry", g6)
    if m @ m != RationalMatrix.identity(2 * n).scaled(2):
        raise TheoremViolation("[[L, I], [I, -L]]^2 = 2I", g6)
    if following @ following != RationalMatrix.identity(2 * n):
        raise TheoremViolation("lifted involution squares to I", g6)
    null_h = nullity(h)
    if null_h != n:
        raise TheoremViolation("null([[L, I], [I, L]]) = |G|", g6, f"nullity {null_h}")
    return HatStep(h, m, following, nxt)


def certify_family(name: str, n: int = 2, steps: int = 1,
                   budget: SearchBudget = DEFAULT_BUDGET) -> Certificate:
    """M(G) = Z(G) = |G| 2^(s-1) for G = base (□ P_2)^s.

    Z is searched exactly when in budget; otherwise only the upper bound of
    one matching side is reported.
    """
    if steps < 1:
        raise GraphArgumentError(f"needs at least one step, got {steps}")
    l = involution_witness(name, n)
    g = base_graph(name, n)
    expected = g.n * 2 ** (steps - 1)
    step = None
    for _ in range(steps):
        step = hat_step(l, g)
        l, g = step.next_involution, step.graph

    g6 = encode_graph6(g)
    m_lower = nullity(step.H)
    if m_lower != expected:
        raise TheoremViolation("M(G (□ P_2)^s) >= |G| 2^(s-1)", g6, f"nullity {m_lower}")

    half = g.n // 2
    side = propagate(g, range(half))
    if not side.complete or side.pt != 1:
        raise TheoremViolation("one side of a matching graph of order 2Z forces in one round", g6)

    z = None
    try:
        report = analyze(g, budget)
    except BudgetExceededError as e:
        logger.info("Z of %s not searched: %s", g6, e)
    else:
        z = report.Z
        if not m_lower <= z:
            raise TheoremViolation("M(G) <= Z(G)", g6, f"M >= {m_lower}, Z = {z}")
        if z != expected or report.pt != 1:
            raise TheoremViolation("Z(G (□ P_2)^s) = |G| 2^(s-1) with pt = 1", g6, f"Z={z}, pt={report.pt}")

    return Certificate(
        family=name if name == "P2" else f"K{n}",
        order=g.n,
        steps=steps,
        graph6=g6,
        M_lower=m_lower,
        Z=z,
        Z_upper=half,
        expected=expected,
        pt=side.pt,
        square_is_2I=True,
        symmetric=step.M_unscaled.is_symmetric(),
        witness=step.M_unscaled.to_strings(),
    )
