"""Recursive atom ordering search and per-pair obstruction certificates."""

from shellab import (
    corpus,
    dual,
    find_grao,
    find_rao,
    ordinal_sum,
    rao_pair_obstructions,
    verify_rao,
)

ex1 = corpus.load_named("fig1")
tree = find_rao(ex1.poset)
print("fig1 recursive atom ordering:", tree.atom_order, "| verifies:", verify_rao(ex1.poset, tree))

for name in ("fig2-P", "fig3-Q"):
    ex = corpus.load_named(name)
    p = ex.poset
    print(f"\n{name}: rao={find_rao(p)} grao={find_grao(p)}")
    print("  per-pair obstructions (first atom, second atom, blocking element):")
    for a, b, y in rao_pair_obstructions(p):
        print(f"    placing {b} right after {a} fails at {y}")

print("\nStacking fig2-P on top of its dual keeps the obstruction on both ends:")
p = corpus.load_named("fig2-P").poset
s = ordinal_sum(p, dual(p))
print("  sum of length", s.length(), "| rao:", find_rao(s), "| rao of dual:", find_rao(dual(s)))
