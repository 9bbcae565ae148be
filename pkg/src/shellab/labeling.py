"""Chain-edge labelings and the lexicographic shellability verifiers.

A chain-edge labeling assigns an integer to every rooted cover relation
(r, x, y); an edge labeling is the special case where the label ignores the
root.  Label sequences are read bottom-to-top and compared in dictionary
order, which for integer tuples is exactly Python's tuple order (a proper
prefix precedes its extensions).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .chains import (
    DEFAULT_ROOTED_COVER_BUDGET,
    ensure_budget,
    interval_chains,
    maximal_chains,
    rooted_cover_relations,
    rooted_intervals,
    roots,
)
from .errors import AmbiguousOrderError, MissingLabelError
from .poset import Poset

KINDS = ("el", "cl", "ec", "cc", "tcl", "self-consistent")


class CELabeling:
    """Total map from rooted cover relations to integer labels.

    `root` arguments are chains from the bottom element up to and including
    the lower element of the cover being labeled.
    """

    def __init__(self, poset: Poset, edge_table=None, chain_table=None):
        if (edge_table is None) == (chain_table is None):
            raise ValueError("provide exactly one of edge_table / chain_table")
        self.poset = poset
        self._edges = dict(edge_table) if edge_table is not None else None
        self._chains = dict(chain_table) if chain_table is not None else None
        self._root_independent = None

    @classmethod
    def from_edges(cls, poset: Poset, table) -> "CELabeling":
        """Edge labeling: one integer per cover pair (u, v)."""
        missing = [c for c in poset.covers if c not in table]
        if missing:
            raise MissingLabelError(f"no label for covers {missing}")
        return cls(poset, edge_table={tuple(k): int(v) for k, v in table.items()})

    @classmethod
    def from_chain_table(cls, poset: Poset, table,
                         budget: int = DEFAULT_ROOTED_COVER_BUDGET) -> "CELabeling":
        """Chain-edge labeling: one integer per rooted cover (root, u, v)."""
        ensure_budget(poset, budget)
        norm = {(tuple(r), u, v): int(lbl) for (r, u, v), lbl in table.items()}
        lab = cls(poset, chain_table=norm)
        for r, u, v in rooted_cover_relations(poset, budget):
            if (r, u, v) not in norm:
                raise MissingLabelError(f"no label for rooted cover ({r!r}, {u!r}, {v!r})")
        return lab

    def label(self, root, u, v) -> int:
        if self._edges is not None:
            try:
                return self._edges[(u, v)]
            except KeyError:
                raise MissingLabelError(f"no label for cover ({u!r}, {v!r})") from None
        try:
            return self._chains[(tuple(root), u, v)]
        except KeyError:
            raise MissingLabelError(
                f"no label for rooted cover ({root!r}, {u!r}, {v!r})"
            ) from None

    def is_root_independent(self) -> bool:
        """True iff the label of every cover is constant over its roots."""
        if self._edges is not None:
            return True
        if self._root_independent is None:
            seen = {}
            flag = True
            for (r, u, v), lbl in self._chains.items():
                if seen.setdefault((u, v), lbl) != lbl:
                    flag = False
                    break
            self._root_independent = flag
        return self._root_independent

    def relabeled(self, mapping) -> "CELabeling":
        """Apply an integer-to-integer map to every label."""
        if self._edges is not None:
            return CELabeling(self.poset, edge_table={
                k: mapping[v] for k, v in self._edges.items()
            })
        return CELabeling(self.poset, chain_table={
            k: mapping[v] for k, v in self._chains.items()
        })


def label_sequence(lab: CELabeling, root, chain) -> tuple:
    """Labels along a saturated chain, with the root accumulating upward."""
    root = tuple(root)
    out = []
    for i in range(len(chain) - 1):
        out.append(lab.label(root, chain[i], chain[i + 1]))
        root = root + (chain[i + 1],)
    return tuple(out)


def lex_compare(s, t) -> int:
    """Dictionary order on label sequences: -1, 0 or 1."""
    s, t = tuple(s), tuple(t)
    if s == t:
        return 0
    return -1 if s < t else 1


class _Verifier:
    """Shared memoized machinery for ascent tests over one labeling."""

    def __init__(self, lab: CELabeling, poset: Poset):
        self.lab = lab
        self.poset = poset
        self._ascents = {}
        self._seqs = {}

    def seq(self, root, chain):
        key = (root, chain)
        got = self._seqs.get(key)
        if got is None:
            got = self._seqs[key] = label_sequence(self.lab, root, chain)
        return got

    def is_ascent(self, root, u, v, w) -> bool:
        """Topological ascent test for the rooted cover pair u < v < w."""
        key = (root, u, v, w)
        got = self._ascents.get(key)
        if got is None:
            pair = (
                self.lab.label(root, u, v),
                self.lab.label(root + (v,), v, w),
            )
            got = True
            for c in interval_chains(self.poset, u, w):
                if c == (u, v, w):
                    continue
                if not pair < self.seq(root, c):
                    got = False
                    break
            self._ascents[key] = got
        return got

    def chain_is_ascending(self, root, chain) -> bool:
        r = root
        for i in range(len(chain) - 2):
            if not self.is_ascent(r, chain[i], chain[i + 1], chain[i + 2]):
                return False
            r = r + (chain[i + 1],)
        return True

    def ascending_chains(self, root, x, y):
        return [c for c in interval_chains(self.poset, x, y)
                if self.chain_is_ascending(root, c)]


def is_topological_ascent(lab: CELabeling, r, u, v, w) -> bool:
    """True iff the label pair of u < v < w strictly dictionary-precedes the
    label sequence of every other maximal chain of [u, w]_r."""
    return _Verifier(lab, lab.poset).is_ascent(tuple(r), u, v, w)


@dataclass
class LabelingReport:
    """Outcome of classify(): one flag per requested kind plus witnesses.

    Flags are None when the kind was not requested.  For every False flag,
    ``witnesses[kind]`` holds the first offending rooted interval (in
    canonical enumeration order) together with the offending chains.
    """

    is_el: bool | None = None
    is_cl: bool | None = None
    is_ec: bool | None = None
    is_cc: bool | None = None
    is_tcl: bool | None = None
    is_self_consistent: bool | None = None
    witnesses: dict = field(default_factory=dict)

    def flag(self, kind: str):
        return getattr(self, "is_" + kind.replace("-", "_"))


def _is_strictly_increasing(seq):
    return all(seq[i] < seq[i + 1] for i in range(len(seq) - 1))


def classify(lab: CELabeling, poset: Poset, kinds=None,
             budget: int = DEFAULT_ROOTED_COVER_BUDGET) -> LabelingReport:
    """Evaluate the requested labeling kinds by direct quantification.

    kinds is an iterable drawn from {"el", "cl", "ec", "cc", "tcl",
    "self-consistent"}; by default all six are checked.  EL and EC
    additionally require the labeling to be root-independent.
    """
    if kinds is None:
        kinds = KINDS
    kinds = set(kinds)
    unknown = kinds - set(KINDS)
    if unknown:
        raise ValueError(f"unknown labeling kinds: {sorted(unknown)}")
    ensure_budget(poset, budget)

    ver = _Verifier(lab, poset)
    report = LabelingReport()
    need_tcl = bool(kinds & {"tcl", "cc", "ec", "self-consistent"})
    need_cc = bool(kinds & {"cc", "ec"})
    need_cl = bool(kinds & {"cl", "el"})

    tcl_ok, cc_ok, cl_ok = True, True, True
    for r, x, y in rooted_intervals(poset, budget):
        if not (tcl_ok or cc_ok or cl_ok):
            break
        chains = interval_chains(poset, x, y)
        seqs = [ver.seq(r, c) for c in chains]

        if need_tcl and tcl_ok:
            ascending = [c for c in chains if ver.chain_is_ascending(r, c)]
            if len(ascending) != 1:
                tcl_ok = False
                report.witnesses.setdefault("tcl", {
                    "root": r, "x": x, "y": y,
                    "ascending_chains": tuple(ascending),
                })

        if need_cc and cc_ok:
            ordered = sorted(seqs)
            distinct = len(set(seqs)) == len(seqs)
            prefix_free = not any(
                ordered[i] == ordered[i + 1][: len(ordered[i])]
                for i in range(len(ordered) - 1)
            )
            if not (distinct and prefix_free):
                cc_ok = False
                report.witnesses.setdefault("cc", {
                    "root": r, "x": x, "y": y,
                    "label_sequences": tuple(sorted(zip(seqs, chains))),
                })

        if need_cl and cl_ok:
            increasing = [c for c, s in zip(chains, seqs) if _is_strictly_increasing(s)]
            good = False
            if len(increasing) == 1:
                s0 = ver.seq(r, increasing[0])
                good = all(s == s0 or s0 < s for s in seqs)
            if not good:
                cl_ok = False
                report.witnesses.setdefault("cl", {
                    "root": r, "x": x, "y": y,
                    "increasing_chains": tuple(increasing),
                })

    root_indep = lab.is_root_independent()
    if "tcl" in kinds:
        report.is_tcl = tcl_ok
    if "cc" in kinds:
        report.is_cc = tcl_ok and cc_ok
        if not tcl_ok:
            report.witnesses.setdefault("cc", report.witnesses.get("tcl", {}))
    if "ec" in kinds:
        report.is_ec = tcl_ok and cc_ok and root_indep
        if not root_indep:
            report.witnesses.setdefault("ec", {"root_independent": False})
        elif not (tcl_ok and cc_ok):
            report.witnesses.setdefault(
                "ec", report.witnesses.get("cc", report.witnesses.get("tcl", {})))
    if "cl" in kinds:
        report.is_cl = cl_ok
    if "el" in kinds:
        report.is_el = cl_ok and root_indep
        if not root_indep:
            report.witnesses.setdefault("el", {"root_independent": False})
        elif not cl_ok:
            report.witnesses.setdefault("el", report.witnesses.get("cl", {}))

    if "self-consistent" in kinds:
        ok, witness = _self_consistency(ver, poset, tcl_ok if need_tcl else None, budget)
        report.is_self_consistent = ok
        if not ok and witness:
            report.witnesses.setdefault("self-consistent", witness)

    return report


def _self_consistency(ver: _Verifier, poset: Poset, tcl_flag, budget):
    """A TCL-labeling is self-consistent when atoms of lexicographically
    first chains stay ahead of their sibling atoms in every other interval
    over the same root."""
    if tcl_flag is None:
        tcl_flag = classify(ver.lab, poset, kinds={"tcl"}, budget=budget).is_tcl
    if not tcl_flag:
        return False, {"not_tcl": True}
    key = poset.index.__getitem__
    for x in poset.elements:
        above = sorted((y for y in poset.upset(x) if y != x), key=key)
        if len(above) < 1:
            continue
        for r in roots(poset, x):
            # per top y': lex bounds of the chains through each atom
            bounds = {}
            for yp in above:
                per_atom = {}
                for c in interval_chains(poset, x, yp):
                    s = ver.seq(r, c)
                    a = c[1]
                    lo, hi = per_atom.get(a, (s, s))
                    per_atom[a] = (min(lo, s), max(hi, s))
                bounds[yp] = per_atom
            for y in above:
                per_atom = bounds[y]
                if len(per_atom) < 2:
                    continue
                best = min(lo for lo, _ in per_atom.values())
                first_atoms = [a for a, (lo, _) in per_atom.items() if lo == best]
                for a in first_atoms:
                    for b in per_atom:
                        if b == a:
                            continue
                        for yp in above:
                            pa = bounds[yp]
                            if a in pa and b in pa and not pa[a][1] < pa[b][0]:
                                return False, {
                                    "root": r, "x": x, "y": y, "y2": yp,
                                    "atom_first": a, "atom_other": b,
                                }
    return True, None


def descent_set(lab: CELabeling, poset: Poset,
                budget: int = DEFAULT_ROOTED_COVER_BUDGET) -> frozenset:
    """All rooted adjacent cover pairs (r, u, v, w) that are topological
    descents; the complement over the same domain are the ascents."""
    ensure_budget(poset, budget)
    ver = _Verifier(lab, poset)
    out = set()
    for u in poset.elements:
        for r in roots(poset, u):
            for v in poset.up[u]:
                for w in poset.up[v]:
                    if not ver.is_ascent(r, u, v, w):
                        out.add((r, u, v, w))
    return frozenset(out)


def lex_order_max_chains(lab: CELabeling, poset: Poset, tie_break: bool = False):
    """Maximal chains sorted by dictionary order of their label sequences.

    Raises AmbiguousOrderError when two distinct chains share a full label
    sequence, unless tie_break is set, in which case canonical chain order
    breaks ties.
    """
    chains = maximal_chains(poset)
    root = (poset.bottom,)
    keyed = [(label_sequence(lab, root, c), i, c) for i, c in enumerate(chains)]
    keyed.sort(key=lambda t: (t[0], t[1]))
    if not tie_break:
        for (s1, _, c1), (s2, _, c2) in zip(keyed, keyed[1:]):
            if s1 == s2:
                raise AmbiguousOrderError(
                    f"chains {c1!r} and {c2!r} share label sequence {s1!r}"
                )
    return tuple(c for _, _, c in keyed)


# -- serialization -----------------------------------------------------

def labeling_to_json(lab: CELabeling) -> dict:
    if lab._edges is not None:
        labels = [
            {"from": u, "to": v, "label": lbl}
            for (u, v), lbl in sorted(
                lab._edges.items(),
                key=lambda kv: (lab.poset.index[kv[0][0]], lab.poset.index[kv[0][1]]),
            )
        ]
        return {"mode": "edge", "labels": labels}
    labels = [
        {"root": list(r), "from": u, "to": v, "label": lbl}
        for (r, u, v), lbl in sorted(
            lab._chains.items(),
            key=lambda kv: (
                [lab.poset.index[e] for e in kv[0][0]],
                lab.poset.index[kv[0][1]],
                lab.poset.index[kv[0][2]],
            ),
        )
    ]
    return {"mode": "chain-edge", "labels": labels}


def labeling_from_json(poset: Poset, data: dict,
                       budget: int = DEFAULT_ROOTED_COVER_BUDGET) -> CELabeling:
    mode = data.get("mode", "edge")
    if mode == "edge":
        table = {(e["from"], e["to"]): e["label"] for e in data["labels"]}
        return CELabeling.from_edges(poset, table)
    if mode == "chain-edge":
        table = {
            (tuple(e["root"]), e["from"], e["to"]): e["label"] for e in data["labels"]
        }
        return CELabeling.from_chain_table(poset, table, budget)
    raise ValueError(f"unknown labeling mode {mode!r}")


def load_labeling(poset: Poset, path,
                  budget: int = DEFAULT_ROOTED_COVER_BUDGET) -> CELabeling:
    with open(path) as fh:
        return labeling_from_json(poset, json.load(fh), budget)
