"""Enumeration of maximal chains, roots, rooted intervals and rooted covers.

Chains are tuples of element identifiers read bottom-to-top.  A root of an
element x is a maximal chain of [bottom, x]; it contains both the bottom
element and x.  All enumerations are deterministic: they follow the canonical
element order of the poset.
"""

from __future__ import annotations

from .errors import BudgetExceededError, InvalidRootError
from .poset import Poset

DEFAULT_ROOTED_COVER_BUDGET = 10_000

Chain = tuple


def maximal_chains(poset: Poset) -> tuple:
    """All maximal bottom-to-top chains, in lexicographic index order."""
    return interval_chains(poset, poset.bottom, poset.top)


def interval_chains(poset: Poset, x, y) -> tuple:
    """All maximal chains of the closed interval [x, y], deterministically.

    Returns the one-element chain (x,) when x == y.
    """
    cached = poset._chain_cache.get((x, y))
    if cached is not None:
        return cached
    if not poset.leq(x, y):
        raise ValueError(f"{x!r} is not below {y!r}")
    down_y = poset.downset(y)
    out = []
    stack = [(x,)]
    while stack:
        chain = stack.pop()
        z = chain[-1]
        if z == y:
            out.append(chain)
            continue
        # push in reverse canonical order so chains pop lexicographically
        for w in reversed(poset.up[z]):
            if w in down_y:
                stack.append(chain + (w,))
    result = tuple(sorted(out, key=lambda c: tuple(poset.index[e] for e in c)))
    poset._chain_cache[(x, y)] = result
    return result


def roots(poset: Poset, x) -> tuple:
    """All roots of x: maximal chains of [bottom, x]."""
    cached = poset._root_cache.get(x)
    if cached is None:
        cached = interval_chains(poset, poset.bottom, x)
        poset._root_cache[x] = cached
    return cached


def is_root(poset: Poset, r, x) -> bool:
    return tuple(r) in roots(poset, x)


def maximal_chains_rooted(poset: Poset, r, x, y) -> tuple:
    """Maximal chains of the rooted interval [x, y]_r.

    The root only scopes the interval; the chains themselves are those of
    [x, y].  Raises InvalidRootError when r is not a maximal chain of
    [bottom, x].
    """
    if not is_root(poset, r, x):
        raise InvalidRootError(f"{r!r} is not a maximal chain of [{poset.bottom!r}, {x!r}]")
    return interval_chains(poset, x, y)


def chain_prefix(chain, x):
    """The subchain of elements up to and including x (``m^x``)."""
    i = chain.index(x)
    return chain[: i + 1]


def rooted_cover_count(poset: Poset) -> int:
    """Number of rooted cover relations, without enumerating them."""
    return sum(poset.path_count(a) for a, _ in poset.covers)


def rooted_interval_count(poset: Poset) -> int:
    """Number of rooted intervals (r, x, y) with x < y."""
    total = 0
    for x in poset.elements:
        strict_above = len(poset.upset(x)) - 1
        total += poset.path_count(x) * strict_above
    return total


def ensure_budget(poset: Poset, budget: int = DEFAULT_ROOTED_COVER_BUDGET):
    """Hard stop before materializing rooted structure on oversized posets."""
    count = rooted_cover_count(poset)
    if count > budget:
        raise BudgetExceededError(
            f"poset has {count} rooted covers, budget is {budget}",
            rooted_covers=count,
            budget=budget,
        )


def rooted_intervals(poset: Poset, budget: int = DEFAULT_ROOTED_COVER_BUDGET):
    """Iterate every rooted interval (r, x, y) with x < y exactly once."""
    ensure_budget(poset, budget)
    key = poset.index.__getitem__
    for x in poset.elements:
        above = sorted((y for y in poset.upset(x) if y != x), key=key)
        if not above:
            continue
        for r in roots(poset, x):
            for y in above:
                yield r, x, y


def rooted_cover_relations(poset: Poset, budget: int = DEFAULT_ROOTED_COVER_BUDGET):
    """Iterate every rooted cover relation (r, x, y) with x covered by y."""
    ensure_budget(poset, budget)
    for x in poset.elements:
        ups = poset.up[x]
        if not ups:
            continue
        for r in roots(poset, x):
            for y in ups:
                yield r, x, y
