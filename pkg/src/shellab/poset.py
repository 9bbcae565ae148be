"""Finite bounded posets stored as irredundant Hasse diagrams.

Elements are opaque identifiers (strings in files).  The canonical element
order is the input order; every enumeration downstream derives its
determinism from it.  Poset values are immutable after construction and all
operations here are pure functions.
"""

from __future__ import annotations

import json
import random

from .errors import CycleDetectedError, NotBoundedError, RedundantCoverError

Element = str
Cover = tuple  # (a, b) with a covered by b


class Poset:
    """A finite bounded poset given by elements and cover relations.

    Use :func:`build_poset` rather than calling this constructor directly;
    the factory validates acyclicity, Hasse irredundancy and boundedness.
    """

    __slots__ = (
        "elements", "covers", "index", "up", "down", "bottom", "top",
        "_upset", "_downset", "_path_counts", "_lmin", "_lmax",
        "_chain_cache", "_root_cache",
    )

    def __init__(self, elements, covers, _validated=False):
        if not _validated:
            built = build_poset(elements, covers)
            elements, covers = built.elements, built.covers
        self.elements = tuple(elements)
        self.covers = tuple(covers)
        self.index = {e: i for i, e in enumerate(self.elements)}
        up = {e: [] for e in self.elements}
        down = {e: [] for e in self.elements}
        for a, b in self.covers:
            up[a].append(b)
            down[b].append(a)
        key = self.index.__getitem__
        self.up = {e: tuple(sorted(vs, key=key)) for e, vs in up.items()}
        self.down = {e: tuple(sorted(vs, key=key)) for e, vs in down.items()}
        self.bottom = next(e for e in self.elements if not self.down[e])
        self.top = next(e for e in self.elements if not self.up[e])
        self._upset = None
        self._downset = None
        self._path_counts = None
        self._lmin = None
        self._lmax = None
        self._chain_cache = {}
        self._root_cache = {}

    # -- order queries -------------------------------------------------

    def _closures(self):
        if self._upset is None:
            order = _topological_order(self.elements, self.up)
            upset = {}
            for e in reversed(order):
                s = {e}
                for w in self.up[e]:
                    s |= upset[w]
                upset[e] = frozenset(s)
            downset = {}
            for e in order:
                s = {e}
                for w in self.down[e]:
                    s |= downset[w]
                downset[e] = frozenset(s)
            self._upset = upset
            self._downset = downset
        return self._upset, self._downset

    def leq(self, a, b):
        """True iff a <= b in the derived order."""
        upset, _ = self._closures()
        return b in upset[a]

    def lt(self, a, b):
        return a != b and self.leq(a, b)

    def upset(self, a):
        """All b with a <= b, as a frozenset."""
        return self._closures()[0][a]

    def downset(self, a):
        return self._closures()[1][a]

    def interval(self, x, y):
        """Elements of [x, y], sorted canonically."""
        members = self.upset(x) & self.downset(y)
        return tuple(sorted(members, key=self.index.__getitem__))

    def atoms(self):
        return self.up[self.bottom]

    def coatoms(self):
        return self.down[self.top]

    def atoms_of(self, x, y):
        """Atoms of the interval [x, y]: covers of x that are below y."""
        down_y = self._closures()[1][y]
        return tuple(v for v in self.up[x] if v in down_y)

    def path_count(self, x):
        """Number of maximal chains of [bottom, x]."""
        if self._path_counts is None:
            counts = {}
            for e in _topological_order(self.elements, self.up):
                counts[e] = 1 if e == self.bottom else sum(counts[d] for d in self.down[e])
            self._path_counts = counts
        return self._path_counts[x]

    def _chain_lengths(self):
        if self._lmin is None:
            lmin, lmax = {}, {}
            for e in _topological_order(self.elements, self.up):
                if e == self.bottom:
                    lmin[e] = lmax[e] = 0
                else:
                    lmin[e] = 1 + min(lmin[d] for d in self.down[e])
                    lmax[e] = 1 + max(lmax[d] for d in self.down[e])
            self._lmin, self._lmax = lmin, lmax
        return self._lmin, self._lmax

    def length(self):
        """Length of the longest chain (bottom to top)."""
        return self._chain_lengths()[1][self.top]

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.elements == other.elements
            and self.covers == other.covers
        )

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self):
        return f"Poset({len(self.elements)} elements, {len(self.covers)} covers)"


def _topological_order(elements, up):
    indeg = {e: 0 for e in elements}
    for e in elements:
        for w in up[e]:
            indeg[w] += 1
    ready = [e for e in elements if indeg[e] == 0]
    order = []
    while ready:
        e = ready.pop()
        order.append(e)
        for w in up[e]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    if len(order) != len(elements):
        raise CycleDetectedError("cover relation contains a directed cycle")
    return order


def build_poset(elements, covers) -> Poset:
    """Validate and build a bounded poset from elements and cover pairs.

    Raises CycleDetectedError, RedundantCoverError or NotBoundedError; a
    transitive cover is rejected rather than silently reduced so that input
    files are unambiguous Hasse data.
    """
    elements = list(elements)
    if len(set(elements)) != len(elements):
        raise ValueError("element identifiers must be distinct")
    known = set(elements)
    seen = set()
    covers = [tuple(c) for c in covers]
    for a, b in covers:
        if a not in known or b not in known:
            raise ValueError(f"cover ({a!r}, {b!r}) references unknown element")
        if a == b:
            raise CycleDetectedError(f"self-loop on {a!r}")
        if (a, b) in seen:
            raise ValueError(f"duplicate cover ({a!r}, {b!r})")
        seen.add((a, b))

    up = {e: [] for e in elements}
    down = {e: [] for e in elements}
    for a, b in covers:
        up[a].append(b)
        down[b].append(a)
    order = _topological_order(elements, up)  # raises on cycles

    upset = {}
    for e in reversed(order):
        s = {e}
        for w in up[e]:
            s |= upset[w]
        upset[e] = s
    for a, b in covers:
        for v in up[a]:
            if v != b and b in upset[v]:
                raise RedundantCoverError(
                    f"cover ({a!r}, {b!r}) is implied via {v!r}"
                )

    minima = [e for e in elements if not down[e]]
    maxima = [e for e in elements if not up[e]]
    if len(minima) != 1 or len(maxima) != 1:
        raise NotBoundedError(
            f"need unique bottom and top, found minima={minima} maxima={maxima}"
        )

    index = {e: i for i, e in enumerate(elements)}
    covers_sorted = sorted(covers, key=lambda c: (index[c[0]], index[c[1]]))
    return Poset(tuple(elements), tuple(covers_sorted), _validated=True)


def is_graded(poset: Poset) -> bool:
    """True iff every maximal bottom-to-top chain has the same length."""
    lmin, lmax = poset._chain_lengths()
    return lmin[poset.top] == lmax[poset.top]


def dual(poset: Poset) -> Poset:
    """The order-dual: covers reversed, bottom and top swapping roles."""
    return build_poset(poset.elements, [(b, a) for a, b in poset.covers])


def ordinal_sum(lower: Poset, upper: Poset) -> Poset:
    """Stack `upper` on top of `lower` with one connecting cover.

    Every element of `lower` lies below every element of `upper`; the only
    new cover is lower.top < upper.bottom.  Identifiers of `upper` that
    collide with identifiers of `lower` get a ``*`` suffix (repeated until
    fresh), so the element count is always ``|lower| + |upper|``.
    """
    taken = set(lower.elements)
    rename = {}
    for e in upper.elements:
        name = e
        while name in taken:
            name = name + "*"
        rename[e] = name
        taken.add(name)
    elements = list(lower.elements) + [rename[e] for e in upper.elements]
    covers = list(lower.covers)
    covers.append((lower.top, rename[upper.bottom]))
    covers.extend((rename[a], rename[b]) for a, b in upper.covers)
    return build_poset(elements, covers)


def random_bounded_poset(seed: int, n: int, edge_probability: float) -> Poset:
    """Deterministic random bounded poset with n elements.

    Samples a random DAG on n-2 labeled internal nodes, takes its transitive
    reduction, then adjoins a bottom below all minimal and a top above all
    maximal internal nodes.  The same seed always yields the same poset.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rng = random.Random(seed)
    k = n - 2
    internal = [f"v{i}" for i in range(1, k + 1)]
    edges = set()
    for i in range(k):
        for j in range(i + 1, k):
            if rng.random() < edge_probability:
                edges.add((internal[i], internal[j]))

    # transitive reduction: drop edges implied by a 2-step path
    succ = {v: {w for (u, w) in edges if u == v} for v in internal}
    reach = {}
    for v in reversed(internal):  # internal list is already topological
        r = set()
        for w in succ[v]:
            r |= {w} | reach[w]
        reach[v] = r
    reduced = {
        (a, b)
        for (a, b) in edges
        if not any(b in reach[v] for v in succ[a] if v != b)
    }

    covers = list(reduced)
    indeg = {v: 0 for v in internal}
    outdeg = {v: 0 for v in internal}
    for a, b in reduced:
        outdeg[a] += 1
        indeg[b] += 1
    for v in internal:
        if indeg[v] == 0:
            covers.append(("0hat", v))
        if outdeg[v] == 0:
            covers.append((v, "1hat"))
    if not internal:
        covers.append(("0hat", "1hat"))
    return build_poset(["0hat"] + internal + ["1hat"], covers)


# -- serialization -----------------------------------------------------

def poset_to_json(poset: Poset) -> dict:
    return {
        "elements": list(poset.elements),
        "covers": [list(c) for c in poset.covers],
    }


def poset_from_json(data: dict) -> Poset:
    return build_poset(data["elements"], [tuple(c) for c in data["covers"]])


def load_poset(path) -> Poset:
    with open(path) as fh:
        return poset_from_json(json.load(fh))


def to_dot(poset: Poset) -> str:
    """Hasse diagram in DOT form, edges directed bottom-to-top."""
    lines = ["digraph hasse {", "  rankdir=BT;"]
    for e in poset.elements:
        lines.append(f'  "{e}";')
    for a, b in poset.covers:
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
