"""Shared fixtures and independent brute-force oracles.

The oracles here deliberately avoid the package's own enumeration code:
reachability is plain BFS on the cover digraph, chains come from a direct
path DFS, and shellability of tiny complexes is settled by trying every
facet permutation.
"""

from itertools import permutations

import pytest

from shellab import build_poset, corpus


# -- independent oracles -------------------------------------------------

def bfs_reachable(covers, start):
    """Elements reachable from start by walking covers upward (inclusive)."""
    adj = {}
    for a, b in covers:
        adj.setdefault(a, []).append(b)
    seen = {start}
    queue = [start]
    while queue:
        v = queue.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def brute_paths(covers, x, y):
    """All cover-paths from x to y, by direct DFS on the raw cover list."""
    adj = {}
    for a, b in covers:
        adj.setdefault(a, []).append(b)
    out = []

    def walk(path):
        v = path[-1]
        if v == y:
            out.append(tuple(path))
            return
        for w in adj.get(v, ()):
            walk(path + [w])

    walk([x])
    return out


def brute_rooted_covers(poset):
    """Triple loop oracle: (root, x, y) with x covered by y."""
    out = []
    for x, y in poset.covers:
        for r in brute_paths(poset.covers, poset.bottom, x):
            out.append((r, x, y))
    return out


def brute_rooted_intervals(poset):
    out = []
    for x in poset.elements:
        for y in poset.elements:
            if x != y and poset.leq(x, y):
                for r in brute_paths(poset.covers, poset.bottom, x):
                    out.append((r, x, y))
    return out


def shelling_orders_by_exhaustion(facets):
    """All facet orders passing the shelling condition, tried literally."""
    facets = [frozenset(f) for f in facets]
    good = []
    for perm in permutations(facets):
        if _is_shelling_literal(perm):
            good.append(perm)
    return good


def _is_shelling_literal(order):
    for j in range(1, len(order)):
        fj = order[j]
        shared = [order[i] & fj for i in range(j)]
        maximal = [s for s in shared if not any(s < t for t in shared)]
        if any(len(s) != len(fj) - 1 for s in maximal):
            return False
    return True


def brute_euler_characteristic(facets):
    """Unreduced Euler characteristic from scratch via subset enumeration."""
    from itertools import combinations

    faces = set()
    for f in facets:
        fs = sorted(f)
        for k in range(1, len(fs) + 1):
            faces.update(map(frozenset, combinations(fs, k)))
    return sum((-1) ** (len(face) - 1) for face in faces)


# -- fixtures ------------------------------------------------------------

@pytest.fixture(scope="session")
def fig1():
    return corpus.load_named("fig1")


@pytest.fixture(scope="session")
def fig2():
    return corpus.load_named("fig2-P")


@pytest.fixture(scope="session")
def fig3():
    return corpus.load_named("fig3-Q")


@pytest.fixture(scope="session")
def fig5p():
    return corpus.load_named("fig5-P")


@pytest.fixture(scope="session")
def fig5q():
    return corpus.load_named("fig5-Q")


@pytest.fixture(scope="session")
def fig8():
    return corpus.load_named("fig8")


@pytest.fixture
def chain3():
    """A chain 0hat < m1 < m2 < 1hat."""
    return build_poset(
        ["0hat", "m1", "m2", "1hat"],
        [("0hat", "m1"), ("m1", "m2"), ("m2", "1hat")],
    )


@pytest.fixture
def diamond():
    """Bottom, two atoms, top."""
    return build_poset(
        ["0hat", "a", "b", "1hat"],
        [("0hat", "a"), ("0hat", "b"), ("a", "1hat"), ("b", "1hat")],
    )
