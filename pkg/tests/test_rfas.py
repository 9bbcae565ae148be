import json

import pytest

from shellab import (
    FirstAtomSet,
    NoLcExtensionError,
    NotAnRfasError,
    NotTclError,
    build_poset,
    chain_order_dag,
    check_lc,
    check_rfas,
    classify,
    compatible_labeling,
    descent_set,
    first_atom_chain,
    first_atom_set_from_json,
    first_atom_set_to_json,
    is_compatible,
    is_shelling,
    linear_extensions,
    maximal_chains,
    order_complex,
    pseudo_descents,
    relabel_from_order,
    restrict_first_atom_set,
    restriction_map,
    rfas_from_tcl,
    shelling_from_rfas,
)
from shellab.labeling import lex_order_max_chains


# -- first atom chains and pseudo descents -------------------------------

def test_first_atom_chain_single_chain(chain3):
    omega = FirstAtomSet.from_entries(chain3)
    assert first_atom_chain(omega, ("0hat",), "0hat", "1hat") == (
        "0hat", "m1", "m2", "1hat"
    )


def test_first_atom_chain_fig8_leftmost_default(fig8):
    omega = fig8.first_atom_set("omega")
    chain = first_atom_chain(omega, ("0hat",), "0hat", "1hat")
    assert chain == ("0hat", "a", "d", "r", "1hat")


def test_first_atom_chain_fig5_collection_c(fig5p):
    omega = fig5p.first_atom_set("C")
    assert first_atom_chain(omega, ("x",), "x", "y") == ("x", "ap", "b", "y")


def test_pseudo_descents_of_first_atom_chain_empty(fig8):
    omega = fig8.first_atom_set("omega")
    fac = first_atom_chain(omega, ("0hat",), "0hat", "1hat")
    assert pseudo_descents(omega, fac) == []


def test_pseudo_descents_nonempty_off_first_chain(fig8):
    omega = fig8.first_atom_set("omega")
    fac = first_atom_chain(omega, ("0hat",), "0hat", "1hat")
    for m in maximal_chains(fig8.poset):
        if m != fac:
            assert pseudo_descents(omega, m)


def test_pseudo_descent_single_chain(chain3):
    omega = FirstAtomSet.from_entries(chain3)
    assert pseudo_descents(omega, ("0hat", "m1", "m2", "1hat")) == []


# -- validation -----------------------------------------------------------

def test_fig5p_collection_c_fails_backward(fig5p):
    report = check_rfas(fig5p.poset, fig5p.first_atom_set("C"))
    assert not report.ok
    directions = {v.direction for v in report.violations if v.condition == "i"}
    assert "backward" in directions


def test_fig5p_collection_cprime_fails_forward(fig5p):
    report = check_rfas(fig5p.poset, fig5p.first_atom_set("Cprime"))
    assert not report.ok
    directions = {v.direction for v in report.violations if v.condition == "i"}
    assert "forward" in directions


def test_fig5q_omega_fails_only_condition_ii(fig5q):
    report = check_rfas(fig5q.poset, fig5q.first_atom_set("omega"))
    assert not report.ok
    assert all(v.condition == "ii" for v in report.violations)


def test_fig8_omega_is_valid(fig8):
    assert check_rfas(fig8.poset, fig8.first_atom_set("omega")).ok


def test_literal_walk_reading_rejects_fig8(fig8):
    # under the one-step reading of the walk-back condition, nothing
    # nontrivial validates
    report = check_rfas(fig8.poset, fig8.first_atom_set("omega"), literal_ii=True)
    assert not report.ok
    assert all(v.condition == "ii" for v in report.violations)


def test_unique_atom_intervals_autofilled(chain3):
    omega = FirstAtomSet.from_entries(chain3, default=None)
    assert omega.first_atom(("0hat",), "0hat", "1hat") == "m1"


def test_restriction_is_still_valid(fig8):
    p, omega = fig8.poset, fig8.first_atom_set("omega")
    for (r, x, y) in [(("0hat",), "0hat", "k"), (("0hat", "b"), "b", "1hat"),
                      (("0hat", "c"), "c", "1hat")]:
        sub, sub_omega = restrict_first_atom_set(p, omega, r, x, y)
        assert check_rfas(sub, sub_omega).ok


# -- chain order ----------------------------------------------------------

def test_single_chain_dag_has_no_edges(chain3):
    omega = FirstAtomSet.from_entries(chain3)
    dag = chain_order_dag(chain3, omega)
    assert dag.edges == frozenset()


def test_dag_requires_valid_table(fig5p):
    with pytest.raises(NotAnRfasError):
        chain_order_dag(fig5p.poset, fig5p.first_atom_set("C"))


def test_fig8_chain_order_path(fig8):
    dag = chain_order_dag(fig8.poset, fig8.first_atom_set("omega"))
    path = [
        ("0hat", "c", "i", "k", "1hat"),
        ("0hat", "c", "i", "j", "1hat"),
        ("0hat", "b", "i", "j", "1hat"),
        ("0hat", "b", "d", "j", "1hat"),
    ]
    for m, m2 in zip(path, path[1:]):
        assert dag.precedes(m, m2)


def test_fig8_dag_antisymmetric_unique_source(fig8):
    omega = fig8.first_atom_set("omega")
    dag = chain_order_dag(fig8.poset, omega)
    assert dag.is_antisymmetric()
    mins = dag.minimal_indices()
    assert len(mins) == 1
    assert dag.chains[mins[0]] == first_atom_chain(omega, ("0hat",), "0hat", "1hat")


def test_linear_extensions_of_antichain():
    # synthetic dag with no relations: every permutation is an extension
    from shellab import ChainOrderDag

    dag = ChainOrderDag((("0hat", "a", "1hat"), ("0hat", "b", "1hat"),
                         ("0hat", "c", "1hat")), frozenset())
    assert len(list(linear_extensions(dag))) == 6


def test_linear_extensions_counts():
    p = build_poset(
        ["0hat", "a", "b", "c", "1hat"],
        [("0hat", "a"), ("0hat", "b"), ("0hat", "c"),
         ("a", "1hat"), ("b", "1hat"), ("c", "1hat")],
    )
    omega = FirstAtomSet.from_entries(
        p,
        {(("0hat",), "0hat", "1hat"): "a",
         (None, "a", "1hat"): "1hat"},
    )
    # not an antichain: the two non-first chains each point back to the
    # first atom chain, which therefore comes first in every extension
    dag = chain_order_dag(p, omega)
    exts = list(linear_extensions(dag))
    assert all(ext[0] == ("0hat", "a", "1hat") for ext in exts)
    assert len(exts) == 2


def test_linear_extensions_total_order(chain3):
    omega = FirstAtomSet.from_entries(chain3)
    assert len(list(linear_extensions(chain_order_dag(chain3, omega)))) == 1


def test_extensions_start_with_first_atom_chain(fig8):
    from itertools import islice

    omega = fig8.first_atom_set("omega")
    dag = chain_order_dag(fig8.poset, omega)
    fac = first_atom_chain(omega, ("0hat",), "0hat", "1hat")
    for ext in islice(linear_extensions(dag), 50):
        assert ext[0] == fac


# -- compatibility ----------------------------------------------------------

def test_fig8_has_no_lc_extension(fig8):
    assert check_lc(fig8.poset, fig8.first_atom_set("omega")) is None


def test_fig8_compatible_labeling_raises(fig8):
    with pytest.raises(NoLcExtensionError):
        compatible_labeling(fig8.poset, fig8.first_atom_set("omega"))


def test_single_chain_lc(chain3):
    omega = FirstAtomSet.from_entries(chain3)
    gamma = check_lc(chain3, omega)
    assert gamma == (("0hat", "m1", "m2", "1hat"),)
    lab = compatible_labeling(chain3, omega)
    assert is_compatible(lab, omega, chain3)


def test_length_one_poset_compatible_labeling():
    p = build_poset(["0hat", "1hat"], [("0hat", "1hat")])
    omega = FirstAtomSet.from_entries(p)
    lab = compatible_labeling(p, omega)
    assert lab.label(("0hat",), "0hat", "1hat") == 1
    assert is_compatible(lab, omega, p)


def test_fig8_no_random_labeling_is_compatible(fig8):
    import random

    from shellab.labeling import CELabeling

    p, omega = fig8.poset, fig8.first_atom_set("omega")
    rng = random.Random(11)
    for _ in range(12):
        lab = CELabeling.from_edges(
            p, {c: rng.randint(1, 6) for c in p.covers}
        )
        assert not is_compatible(lab, omega, p)


def test_rfas_from_tcl_rejects_non_tcl(fig1):
    from shellab.labeling import CELabeling

    p = fig1.poset
    constant = CELabeling.from_edges(p, {c: 1 for c in p.covers})
    with pytest.raises(NotTclError):
        rfas_from_tcl(p, constant)


def test_rfas_from_tcl_degenerate_tie_case():
    # a labeling can satisfy the unique-ascending-chain condition without
    # its ascending chain being lexicographically first: two chains with
    # tied sequences put each other into descent while a chain whose
    # two-step subintervals are all singletons ascends vacuously.  The
    # chain-order rebuild removes the tie and with it unique ascendance,
    # so the first-atom construction must refuse rather than mis-build.
    from shellab.labeling import CELabeling

    p = build_poset(
        ["0hat", "v1", "v2", "v3", "v5", "v4", "1hat"],
        [("0hat", "v1"), ("0hat", "v2"), ("0hat", "v3"), ("0hat", "v5"),
         ("v1", "v4"), ("v2", "1hat"), ("v3", "1hat"), ("v4", "1hat"),
         ("v5", "1hat")],
    )
    lab = CELabeling.from_edges(p, {
        ("0hat", "v1"): 2, ("0hat", "v2"): 4, ("0hat", "v3"): 2,
        ("0hat", "v5"): 2, ("v1", "v4"): 4, ("v2", "1hat"): 3,
        ("v3", "1hat"): 3, ("v4", "1hat"): 4, ("v5", "1hat"): 3,
    })
    rep = classify(lab, p, kinds={"tcl", "cc"})
    assert rep.is_tcl and not rep.is_cc
    with pytest.raises(NotTclError):
        rfas_from_tcl(p, lab)


def test_rfas_from_tcl_chain_poset(chain3):
    from shellab.labeling import CELabeling

    lab = CELabeling.from_edges(
        chain3, {("0hat", "m1"): 2, ("m1", "m2"): 9, ("m2", "1hat"): 1}
    )
    omega = rfas_from_tcl(chain3, lab)
    assert check_rfas(chain3, omega).ok


@pytest.mark.parametrize("name,labkey", [("fig2-P", "bold"), ("fig3-Q", "left")])
def test_rfas_from_tcl_pipeline(name, labkey):
    from shellab import corpus

    ex = corpus.load_named(name)
    p, lab = ex.poset, ex.labeling(labkey)
    omega = rfas_from_tcl(p, lab)
    assert check_rfas(p, omega).ok
    gamma = check_lc(p, omega)
    assert gamma is not None
    lab2 = compatible_labeling(p, omega)
    assert classify(lab2, p, kinds={"tcl"}).is_tcl
    assert is_compatible(lab2, omega, p)


def test_round_trip_descents_match_pseudo_descents(fig2):
    # designated-atom violations along maximal chains sit exactly where the
    # rebuilt labeling has topological descents
    p, bold = fig2.poset, fig2.labeling("bold")
    omega = rfas_from_tcl(p, bold)
    relabeled = relabel_from_order(p, lex_order_max_chains(bold, p))
    descents = descent_set(relabeled, p)
    for m in maximal_chains(p):
        pd = set(pseudo_descents(omega, m))
        td = set()
        for i in range(len(m) - 2):
            r = m[: i + 1]
            if (r, m[i], m[i + 1], m[i + 2]) in descents:
                td.add((m[i], m[i + 1], m[i + 2]))
        assert pd == td


def test_shelling_from_rfas(fig2):
    p = fig2.poset
    omega = rfas_from_tcl(p, fig2.labeling("bold"))
    order = shelling_from_rfas(p, omega)
    k = order_complex(p)
    facets = [frozenset(c) for c in order]
    assert is_shelling(k, facets).ok
    rmap = restriction_map(k, facets)
    for c, f in zip(order, facets):
        mids = frozenset(y for (_, y, _) in pseudo_descents(omega, c))
        assert rmap[f] == mids


def test_first_atom_set_json_roundtrip(fig8):
    p, omega = fig8.poset, fig8.first_atom_set("omega")
    data = json.loads(json.dumps(first_atom_set_to_json(omega)))
    back = first_atom_set_from_json(p, data)
    assert back.table == omega.table
