"""Order complexes, shelling verification, restriction maps and wedge counts.

Shellings are checked in the nonpure sense: each facet after the first must
meet the union of its predecessors in a pure subcomplex of dimension one
less than the facet's own.  Two equivalent formulations are implemented: a
pairwise-witness test and a direct face-purity test; property tests assert
their agreement.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .chains import interval_chains, maximal_chains, roots
from .errors import (
    AmbiguousRootError,
    BudgetExceededError,
    EmptyIntervalError,
    NotAShellingError,
)
from .labeling import CELabeling, _Verifier
from .poset import Poset


@dataclass(frozen=True)
class OrderComplex:
    """A simplicial complex given by its facets (inclusion-maximal faces)."""

    vertices: tuple
    facets: tuple

    def __post_init__(self):
        for f, g in combinations(self.facets, 2):
            if f <= g or g <= f:
                raise ValueError("facets must not contain one another")
        covered = set().union(*self.facets) if self.facets else set()
        if covered != set(self.vertices):
            raise ValueError("every vertex must lie in some facet")

    def faces(self):
        """All nonempty faces."""
        out = set()
        for f in self.facets:
            fs = sorted(f)
            for k in range(1, len(fs) + 1):
                out.update(map(frozenset, combinations(fs, k)))
        return out

    def euler_characteristic(self) -> int:
        """Unreduced Euler characteristic by direct face enumeration."""
        return sum((-1) ** (len(face) - 1) for face in self.faces())

    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        while frontier:
            v = frontier.pop()
            for f in self.facets:
                if v in f:
                    for w in f:
                        if w not in seen:
                            seen.add(w)
                            frontier.append(w)
        return len(seen) == len(self.vertices)

    def vertex_degrees(self) -> dict:
        """Vertex degrees of the 1-skeleton."""
        edges = {e for f in self.facets for e in map(frozenset, combinations(sorted(f), 2))}
        deg = {v: 0 for v in self.vertices}
        for e in edges:
            for v in e:
                deg[v] += 1
        return deg


def order_complex(poset: Poset, interval=None) -> OrderComplex:
    """The order complex of the poset, or of an open interval (x, y).

    With `interval=(x, y)` the facets are the maximal chains of [x, y]
    stripped of both endpoints; the full complex keeps the bounds (and is
    therefore a double cone).
    """
    key = poset.index.__getitem__
    if interval is None:
        facets = [frozenset(c) for c in maximal_chains(poset)]
        vertices = tuple(poset.elements)
        return OrderComplex(vertices, tuple(facets))
    x, y = interval
    inner = [e for e in poset.interval(x, y) if e not in (x, y)]
    if not inner:
        raise EmptyIntervalError(f"open interval ({x!r}, {y!r}) is empty")
    facets = []
    seen = set()
    for c in interval_chains(poset, x, y):
        facet = frozenset(c[1:-1])
        if facet not in seen:
            seen.add(facet)
            facets.append(facet)
    vertices = tuple(sorted(inner, key=key))
    return OrderComplex(vertices, tuple(facets))


@dataclass
class ShellingResult:
    ok: bool
    first_violation: tuple | None = None  # (j, i) facet positions

    def __bool__(self):
        return self.ok


def _check_order_is_permutation(complex_: OrderComplex, order):
    order = tuple(order)
    if sorted(order, key=sorted) != sorted(complex_.facets, key=sorted):
        raise ValueError("order must be a permutation of the facets")
    return order


def is_shelling(complex_: OrderComplex, order) -> ShellingResult:
    """Pairwise-witness shelling test.

    For each j > 1 and i < j there must be k < j with
    F_i & F_j <= F_k & F_j and |F_k & F_j| = |F_j| - 1.
    """
    order = _check_order_is_permutation(complex_, order)
    for j in range(1, len(order)):
        fj = order[j]
        big = [order[k] & fj for k in range(j) if len(order[k] & fj) == len(fj) - 1]
        for i in range(j):
            inter = order[i] & fj
            if not any(inter <= w for w in big):
                return ShellingResult(False, (j, i))
    return ShellingResult(True)


def is_shelling_facewise(complex_: OrderComplex, order) -> ShellingResult:
    """Face-purity formulation: the intersection with the union of earlier
    facet closures is pure of dimension dim(F_j) - 1."""
    order = _check_order_is_permutation(complex_, order)
    for j in range(1, len(order)):
        fj = order[j]
        shared = {order[i] & fj for i in range(j)}
        maximal = [s for s in shared
                   if not any(s < t for t in shared)]
        if any(len(s) != len(fj) - 1 for s in maximal):
            bad = next(i for i in range(j)
                       if (order[i] & fj) in
                       {s for s in maximal if len(s) != len(fj) - 1})
            return ShellingResult(False, (j, bad))
    return ShellingResult(True)


def restriction_map(complex_: OrderComplex, order) -> dict:
    """R(F_j) = vertices v of F_j with F_j - v contained in an earlier facet.

    The new faces contributed at step j are exactly those containing R(F_j).
    Raises NotAShellingError when the order is not a shelling.
    """
    order = tuple(order)
    if not is_shelling(complex_, order).ok:
        raise NotAShellingError("facet order fails the shelling condition")
    out = {}
    for j, fj in enumerate(order):
        out[fj] = frozenset(
            v for v in fj if any(fj - {v} <= order[i] for i in range(j))
        )
    return out


@dataclass
class HomotopyReport:
    """Wedge summand counts per dimension, with an Euler cross-check."""

    wedge_counts: dict
    euler_characteristic: int

    def total_spheres(self) -> int:
        return sum(self.wedge_counts.values())


def homotopy_report(complex_: OrderComplex, order) -> HomotopyReport:
    """Counts of homology facets (R(F_j) = F_j) per dimension.

    A shelled complex is homotopy equivalent to a wedge with these summand
    counts; the unreduced Euler characteristic is cross-checked against them.
    """
    rmap = restriction_map(complex_, order)  # validates the shelling
    counts = {}
    for facet, restr in rmap.items():
        if restr == facet:
            d = len(facet) - 1
            counts[d] = counts.get(d, 0) + 1
    chi = complex_.euler_characteristic()
    predicted = 1 + sum((-1) ** d * k for d, k in counts.items())
    if chi != predicted:
        raise AssertionError(
            f"euler characteristic {chi} disagrees with wedge counts {counts}"
        )
    return HomotopyReport(counts, chi)


def brute_force_shellable(complex_: OrderComplex, max_facets: int = 9,
                          budget: int | None = None):
    """Some shelling order, or None when provably none exists.

    Backtracks over facet prefixes; since admissibility of appending a facet
    depends only on the set of earlier facets, failed prefix sets are
    memoized, so the search is exponential in the facet count rather than
    factorial.  Posets with more than `max_facets` facets are refused.
    """
    facets = complex_.facets
    n = len(facets)
    if n > max_facets:
        raise BudgetExceededError(
            f"complex has {n} facets, brute-force cap is {max_facets}",
            facets=n, max_facets=max_facets,
        )
    if n == 0:
        return ()
    dead = set()

    def can_append(placed_idx, j):
        fj = facets[j]
        big = [facets[k] & fj for k in placed_idx
               if len(facets[k] & fj) == len(fj) - 1]
        for i in placed_idx:
            inter = facets[i] & fj
            if not any(inter <= w for w in big):
                return False
        return True

    def search(placed, placed_set):
        if len(placed) == n:
            return tuple(facets[i] for i in placed)
        key = frozenset(placed_set)
        if key in dead:
            return None
        for j in range(n):
            if j in placed_set:
                continue
            if placed and not can_append(placed, j):
                continue
            placed.append(j)
            placed_set.add(j)
            found = search(placed, placed_set)
            if found is not None:
                return found
            placed.pop()
            placed_set.remove(j)
        dead.add(key)
        return None

    return search([], set())


def descending_chains(poset: Poset, lab: CELabeling, x, y, root=None):
    """Maximal chains of [x, y] all of whose adjacent cover pairs are
    topological descents under the labeling.

    The root of x is inferred when unique; otherwise it must be supplied.
    """
    if root is None:
        candidates = roots(poset, x)
        if len(candidates) != 1:
            raise AmbiguousRootError(
                f"{x!r} has {len(candidates)} roots; pass one explicitly"
            )
        root = candidates[0]
    root = tuple(root)
    ver = _Verifier(lab, poset)
    out = []
    for c in interval_chains(poset, x, y):
        r = root
        descending = True
        for i in range(len(c) - 2):
            if ver.is_ascent(r, c[i], c[i + 1], c[i + 2]):
                descending = False
                break
            r = r + (c[i + 1],)
        if descending:
            out.append(c)  # a single-cover chain is vacuously all-descent
    return out


# -- serialization -----------------------------------------------------

def complex_to_json(complex_: OrderComplex) -> dict:
    return {"facets": [sorted(f) for f in complex_.facets]}


def complex_from_json(data: dict) -> OrderComplex:
    facets = tuple(frozenset(f) for f in data["facets"])
    vertices = tuple(sorted(set().union(*facets))) if facets else ()
    return OrderComplex(vertices, facets)


def load_complex(path) -> OrderComplex:
    with open(path) as fh:
        return complex_from_json(json.load(fh))
