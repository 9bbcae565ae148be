"""Order complexes, brute-force shellability, and wedge decompositions."""

from shellab import (
    brute_force_shellable,
    corpus,
    descending_chains,
    homotopy_report,
    label_sequence,
    order_complex,
)

ex = corpus.load_named("fig2-P")
p, bold = ex.poset, ex.labeling("bold")

print("Upper order complexes of the atoms (all isomorphic):")
for atom in p.atoms():
    k = order_complex(p, interval=(atom, "1hat"))
    rep = homotopy_report(k, brute_force_shellable(k))
    print(f"  ({atom}, 1hat): {len(k.vertices)} vertices, {len(k.facets)} edges,"
          f" euler={rep.euler_characteristic}, wedge of {rep.wedge_counts.get(1, 0)} circle(s),"
          f" degrees={sorted(k.vertex_degrees().values())}")

x = next(e for e in p.coatoms() if len(p.up[e]) + len(p.down[e]) == 7)
print(f"\nOpen lower interval of the degree-7 coatom {x}:")
k = order_complex(p, interval=(p.bottom, x))
rep = homotopy_report(k, brute_force_shellable(k, max_facets=len(k.facets)))
print(f"  {len(k.vertices)} vertices, {len(k.facets)} edges, euler={rep.euler_characteristic},"
      f" wedge of {rep.wedge_counts.get(1, 0)} circles")
print("  all-descent chains under the primary labeling:")
for c in descending_chains(p, bold, p.bottom, x):
    print("   ", " < ".join(c), "->", label_sequence(bold, (p.bottom,), c))

print("\nA complex that no facet order shells (disjoint branch of full dimension):")
exq = corpus.load_named("fig5-Q")
kq = order_complex(exq.poset)
print("  facets:", [sorted(f) for f in kq.facets])
print("  brute-force result:", brute_force_shellable(kq))
