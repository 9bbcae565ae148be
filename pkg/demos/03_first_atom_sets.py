"""First atom sets: validation, induced chain order, and compatibility.

A first atom set designates one atom per rooted interval.  Valid tables
order the maximal chains (replace a designated-atom violation by the first
atom chain to move earlier) and every linear extension of that order shells
the order complex.  Compatibility with a chain-edge labeling is a separate,
stronger condition.
"""

from itertools import islice

from shellab import (
    NoLcExtensionError,
    chain_order_dag,
    check_lc,
    check_rfas,
    compatible_labeling,
    corpus,
    first_atom_chain,
    is_shelling,
    linear_extensions,
    order_complex,
    pseudo_descents,
    rfas_from_tcl,
)

print("== two collections that fail validation ==")
ex = corpus.load_named("fig5-P")
for key in ("C", "Cprime"):
    report = check_rfas(ex.poset, ex.first_atom_set(key))
    print(f"{key}: ok={report.ok}")
    for v in report.violations:
        print(f"    condition ({v.condition}) {v.direction or ''} at atom {v.atom}: {v.detail}")

print("\n== a table that validates but admits no compatible labeling ==")
ex8 = corpus.load_named("fig8")
p8, omega8 = ex8.poset, ex8.first_atom_set("omega")
print("validates:", check_rfas(p8, omega8).ok)
print("first atom chain:", " < ".join(first_atom_chain(omega8, ("0hat",), "0hat", "1hat")))
print("sandwich-free linear extension:", check_lc(p8, omega8))
try:
    compatible_labeling(p8, omega8)
except NoLcExtensionError as exc:
    print("compatible_labeling:", exc)

print("\n== the pipeline from a TCL-labeling ==")
ex2 = corpus.load_named("fig2-P")
p2 = ex2.poset
omega2 = rfas_from_tcl(p2, ex2.labeling("bold"))
dag = chain_order_dag(p2, omega2)
print("chain order edges:", len(dag.edges), "| antisymmetric:", dag.is_antisymmetric())
k = order_complex(p2)
for i, ext in enumerate(islice(linear_extensions(dag), 3)):
    facets = [frozenset(c) for c in ext]
    print(f"extension {i}: shelling = {is_shelling(k, facets).ok}")
first = next(linear_extensions(dag))
print("pseudo descents predict each facet's restriction set:")
for c in first[:4]:
    print("   ", " ".join(c), "->", pseudo_descents(omega2, c))
