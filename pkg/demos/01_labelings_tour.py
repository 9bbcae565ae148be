"""Tour of the labeling checkers on the six-element example poset.

The poset has two atoms and two coatoms with all four mid-level covers
present.  Three labelings of it land in three different places of the
lexicographic-shellability hierarchy.
"""

from shellab import classify, corpus, label_sequence, lex_order_max_chains, maximal_chains

ex = corpus.load_named("fig1")
p = ex.poset

print("poset:", p)
print("maximal chains:")
for m in maximal_chains(p):
    print("   ", " < ".join(m))

for key in ("left", "middle", "right"):
    lab = ex.labeling(key)
    rep = classify(lab, p)
    print(f"\n{key} labeling:")
    for m in maximal_chains(p):
        print("   ", " < ".join(m), "->", label_sequence(lab, (p.bottom,), m))
    flags = {k: rep.flag(k) for k in ("el", "cl", "ec", "cc", "tcl")}
    print("    verdicts:", flags)
    order = lex_order_max_chains(lab, p)
    print("    induced order:", [" ".join(m) for m in order])

print("\nThe left labeling has the unique increasing chain lexicographically")
print("first in every interval; the middle one needs the root to decide a")
print("top label, so it cannot be an edge labeling; the right one has two")
print("increasing chains above one atom yet still a unique topologically")
print("ascending chain per rooted interval.")
