import pytest

from shellab import (
    MalformedCertificateError,
    RaoTree,
    build_poset,
    dual,
    find_grao,
    find_rao,
    ordinal_sum,
    rao_pair_obstructions,
    verify_grao,
    verify_rao,
)


def test_edge_poset_trivial_rao():
    p = build_poset(["0hat", "1hat"], [("0hat", "1hat")])
    tree = find_rao(p)
    assert tree is not None
    assert verify_rao(p, tree)
    assert find_grao(p) is not None


def test_fig1_has_rao_and_grao(fig1):
    p = fig1.poset
    tree = find_rao(p)
    assert tree is not None
    assert verify_rao(p, tree)
    gtree = find_grao(p)
    assert gtree is not None
    assert verify_grao(p, gtree)


def test_rao_implies_grao_on_corpus(fig1, chain3, diamond):
    for p in (fig1.poset, chain3, diamond):
        if find_rao(p) is not None:
            assert find_grao(p) is not None


def test_fig2_no_rao_no_grao(fig2):
    assert find_rao(fig2.poset) is None
    assert find_grao(fig2.poset) is None


def test_fig3_no_rao(fig3):
    assert find_rao(fig3.poset) is None
    assert find_grao(fig3.poset) is None


def test_fig2_pair_obstructions(fig2):
    p = fig2.poset
    obs = rao_pair_obstructions(p)
    ordered_pairs = {(a, b) for a, b, _ in obs}
    atoms = p.atoms()
    assert ordered_pairs == {(a, b) for a in atoms for b in atoms if a != b}
    for a, b, y in obs:
        assert p.lt(a, y) and p.lt(b, y)
        assert not any(p.leq(z, y) and p.lt(a, z) for z in p.up[b])


def test_fig3_pair_obstructions(fig3):
    assert rao_pair_obstructions(fig3.poset) == [("c", "d", "y"), ("d", "c", "yp")]


def test_diamond_has_no_obstruction(diamond):
    assert rao_pair_obstructions(diamond) == []
    assert find_rao(diamond) is not None


def test_obstructions_imply_absence(fig2, fig3, fig1, diamond, chain3):
    # whenever every ordered atom pair is obstructed, the searches agree
    for p in (fig2.poset, fig3.poset, fig1.poset, diamond, chain3):
        obs = {(a, b) for a, b, _ in rao_pair_obstructions(p)}
        atoms = p.atoms()
        every_pair = {(a, b) for a in atoms for b in atoms if a != b}
        if obs >= every_pair and len(atoms) > 1:
            assert find_rao(p) is None
            assert find_grao(p) is None


def test_verify_rejects_pair_condition_violation(fig3):
    # neither atom of this poset can be followed by the other, so any
    # two-atom order fails the pair condition before children are consulted
    q = fig3.poset
    for order in (("c", "d"), ("d", "c")):
        assert not verify_rao(q, RaoTree("0hat", order, {}))


def test_verify_rejects_bad_shape(fig1):
    p = fig1.poset
    with pytest.raises(MalformedCertificateError):
        verify_rao(p, RaoTree("0hat", ("a",), {}))


def test_ordinal_sum_no_rao(fig2):
    p = fig2.poset
    s = ordinal_sum(p, dual(p))
    assert find_rao(s) is None
    assert find_rao(dual(s)) is None


def test_grao_condition_distinguishes(fig1):
    # chain posets have exactly one certificate shape
    p = build_poset(["0hat", "m", "1hat"], [("0hat", "m"), ("m", "1hat")])
    tree = find_rao(p)
    assert tree.atom_order == ("m",)
    assert tree.children["m"].atom_order == ("1hat",)
