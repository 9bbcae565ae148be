"""Command-line front end.

Every subcommand emits a report whose payload is byte-stable across runs for
fixed inputs: the ``timings`` field carries deterministic work counters, not
wall-clock times.  Exit status is 0 when every requested verdict holds, 1
when one fails, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus
from .chains import (
    DEFAULT_ROOTED_COVER_BUDGET,
    interval_chains,
    maximal_chains,
    rooted_cover_count,
)
from .errors import ShellabError
from .labeling import (
    classify,
    labeling_from_json,
    labeling_to_json,
    lex_order_max_chains,
)
from .poset import load_poset, poset_from_json, to_dot
from .rao import find_grao, find_rao, rao_pair_obstructions, DEFAULT_SEARCH_BUDGET
from .relabel import relabel_from_order
from .rfas import (
    DEFAULT_LC_BUDGET,
    check_lc,
    check_rfas,
    first_atom_set_from_json,
    first_atom_set_to_json,
    rfas_from_tcl,
    shelling_from_rfas,
)
from .shelling import complex_from_json, is_shelling, order_complex


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _resolve_poset(ref):
    if ref.startswith("corpus:"):
        name = ref.split(":", 1)[1].split("/", 1)[0]
        return corpus.load_named(name).poset
    return load_poset(ref)


def _resolve_labeling(poset, ref, budget):
    if ref.startswith("corpus:"):
        name, _, key = ref.split(":", 1)[1].partition("/")
        ex = corpus.load_named(name)
        if not key or key not in ex.labelings:
            raise ShellabError(
                f"corpus example {name!r} labelings: {sorted(ex.labelings)}"
            )
        return ex.labelings[key]
    return labeling_from_json(poset, _load_json(ref), budget)


def _resolve_first_atom_set(poset, ref, budget):
    if ref.startswith("corpus:"):
        name, _, key = ref.split(":", 1)[1].partition("/")
        ex = corpus.load_named(name)
        if not key or key not in ex.first_atom_sets:
            raise ShellabError(
                f"corpus example {name!r} first atom sets: {sorted(ex.first_atom_sets)}"
            )
        return ex.first_atom_sets[key]
    return first_atom_set_from_json(poset, _load_json(ref), budget)


def _chain_str(chain):
    return " ".join(chain)


def _witness_jsonable(value):
    if isinstance(value, (list, tuple, frozenset, set)):
        return [_witness_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _witness_jsonable(v) for k, v in value.items()}
    return value


class Report:
    """Accumulates verdicts and witnesses with a stable field order."""

    def __init__(self, command, inputs):
        self.command = command
        self.inputs = inputs
        self.verdicts = {}
        self.witnesses = {}
        self.timings = {}
        self.lines = []

    def verdict(self, name, ok):
        self.verdicts[name] = bool(ok)

    def witness(self, name, payload):
        self.witnesses[name] = _witness_jsonable(payload)

    def timing(self, name, count):
        self.timings[name] = count

    def line(self, text):
        self.lines.append(text)

    @property
    def ok(self):
        return all(self.verdicts.values())

    def emit(self, as_json):
        if as_json:
            payload = {
                "command": self.command,
                "inputs": self.inputs,
                "verdicts": self.verdicts,
                "witnesses": self.witnesses,
                "timings": self.timings,
            }
            print(json.dumps(payload, indent=2, sort_keys=False))
        else:
            for text in self.lines:
                print(text)
            for name, ok in self.verdicts.items():
                print(f"{name}: {'ok' if ok else 'FAIL'}")
                if not ok and name in self.witnesses:
                    print(f"  witness: {self.witnesses[name]}")
        return 0 if self.ok else 1


def _add_common(parser):
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    parser.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker cap (results are identical for any N)")
    parser.add_argument("--max-rooted-covers", type=int,
                        default=DEFAULT_ROOTED_COVER_BUDGET)
    parser.add_argument("--search-budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    parser.add_argument("--lc-budget", type=int, default=DEFAULT_LC_BUDGET)
    parser.add_argument("--max-facets", type=int, default=9)


def build_parser():
    top = argparse.ArgumentParser(
        prog="shellab",
        description="Lexicographic shellability toolkit for finite bounded posets.",
    )
    sub = top.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("chains", help="print maximal chains")
    p.add_argument("poset")
    p.add_argument("--rooted", nargs=2, metavar=("X", "Y"),
                   help="restrict to the interval [X, Y]")
    _add_common(p)

    p = sub.add_parser("check", help="verify a labeling kind")
    p.add_argument("--kind", required=True,
                   choices=["el", "cl", "ec", "cc", "tcl", "self-consistent"])
    p.add_argument("poset")
    p.add_argument("labeling")
    _add_common(p)

    p = sub.add_parser("relabel", help="labeling from a maximal chain order")
    p.add_argument("poset")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--order-from-labeling", metavar="LABELING")
    g.add_argument("--order-file", metavar="FILE")
    p.add_argument("--out", metavar="FILE")
    _add_common(p)

    p = sub.add_parser("rfas-check", help="validate a first atom set")
    p.add_argument("poset")
    p.add_argument("rfas")
    p.add_argument("--rfas-ii-literal", action="store_true",
                   help="use the one-step reading of the walk-back condition")
    _add_common(p)

    p = sub.add_parser("rfas-shell", help="shelling order from a first atom set")
    p.add_argument("poset")
    p.add_argument("rfas")
    _add_common(p)

    p = sub.add_parser("rfas-from-tcl", help="first atom set from a TCL-labeling")
    p.add_argument("poset")
    p.add_argument("labeling")
    p.add_argument("--out", metavar="FILE")
    _add_common(p)

    p = sub.add_parser("lc-check", help="sandwich-free linear extension search")
    p.add_argument("poset")
    p.add_argument("rfas")
    _add_common(p)

    p = sub.add_parser("rao", help="recursive atom ordering search")
    p.add_argument("poset")
    p.add_argument("--grao", action="store_true")
    p.add_argument("--certificate", metavar="FILE")
    _add_common(p)

    p = sub.add_parser("shelling-verify", help="verify a facet order")
    p.add_argument("complex_or_poset")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--order-file", metavar="FILE")
    g.add_argument("--from-labeling", metavar="LABELING")
    g.add_argument("--from-rfas", metavar="RFAS")
    _add_common(p)

    p = sub.add_parser("corpus", help="list or dump built-in examples")
    p.add_argument("name", nargs="?")
    _add_common(p)

    p = sub.add_parser("export-dot", help="Hasse diagram in DOT form")
    p.add_argument("poset")
    p.add_argument("--out", metavar="FILE")
    _add_common(p)

    return top


def _cmd_chains(args, report):
    poset = _resolve_poset(args.poset)
    if args.rooted:
        x, y = args.rooted
        chains = interval_chains(poset, x, y)
    else:
        chains = maximal_chains(poset)
    for c in chains:
        report.line(_chain_str(c))
    report.verdict("enumerated", True)
    report.witness("chains", [list(c) for c in chains])
    report.timing("chain_count", len(chains))


def _cmd_check(args, report):
    poset = _resolve_poset(args.poset)
    lab = _resolve_labeling(poset, args.labeling, args.max_rooted_covers)
    rep = classify(lab, poset, kinds={args.kind}, budget=args.max_rooted_covers)
    ok = rep.flag(args.kind)
    report.verdict(args.kind, ok)
    if not ok:
        report.witness(args.kind, rep.witnesses.get(args.kind, {}))
    report.timing("rooted_covers", rooted_cover_count(poset))


def _cmd_relabel(args, report):
    poset = _resolve_poset(args.poset)
    if args.order_from_labeling:
        lab = _resolve_labeling(poset, args.order_from_labeling, args.max_rooted_covers)
        order = lex_order_max_chains(lab, poset, tie_break=True)
    else:
        with open(args.order_file) as fh:
            order = tuple(tuple(line.split()) for line in fh if line.strip())
    out = relabel_from_order(poset, order, args.max_rooted_covers)
    payload = json.dumps(labeling_to_json(out), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        report.line(payload)
    report.verdict("relabeled", True)
    report.timing("maximal_chains", len(order))


def _cmd_rfas_check(args, report):
    poset = _resolve_poset(args.poset)
    omega = _resolve_first_atom_set(poset, args.rfas, args.max_rooted_covers)
    rep = check_rfas(poset, omega, literal_ii=args.rfas_ii_literal,
                     budget=args.max_rooted_covers)
    report.verdict("rfas", rep.ok)
    if not rep.ok:
        report.witness("rfas", [
            {"condition": v.condition, "direction": v.direction,
             "root": list(v.root), "x": v.x, "y": v.y, "atom": v.atom}
            for v in rep.violations
        ])
    report.timing("rooted_covers", rooted_cover_count(poset))


def _cmd_rfas_shell(args, report):
    poset = _resolve_poset(args.poset)
    omega = _resolve_first_atom_set(poset, args.rfas, args.max_rooted_covers)
    order = shelling_from_rfas(poset, omega, args.max_rooted_covers)
    complex_ = order_complex(poset)
    ok = is_shelling(complex_, [frozenset(c) for c in order]).ok
    for c in order:
        report.line(_chain_str(c))
    report.verdict("shelling", ok)
    report.witness("order", [list(c) for c in order])
    report.timing("facets", len(order))


def _cmd_rfas_from_tcl(args, report):
    poset = _resolve_poset(args.poset)
    lab = _resolve_labeling(poset, args.labeling, args.max_rooted_covers)
    omega = rfas_from_tcl(poset, lab, args.max_rooted_covers)
    payload = json.dumps(first_atom_set_to_json(omega), indent=2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload + "\n")
    else:
        report.line(payload)
    report.verdict("rfas-from-tcl", True)
    report.timing("rooted_covers", rooted_cover_count(poset))


def _cmd_lc_check(args, report):
    poset = _resolve_poset(args.poset)
    omega = _resolve_first_atom_set(poset, args.rfas, args.max_rooted_covers)
    gamma = check_lc(poset, omega, args.lc_budget, args.max_rooted_covers)
    if gamma is None:
        report.line("none")
        report.verdict("lc-extension", False)
    else:
        for c in gamma:
            report.line(_chain_str(c))
        report.verdict("lc-extension", True)
        report.witness("order", [list(c) for c in gamma])
    report.timing("maximal_chains", len(maximal_chains(poset)))


def _cmd_rao(args, report):
    poset = _resolve_poset(args.poset)
    finder = find_grao if args.grao else find_rao
    tree = finder(poset, args.search_budget)
    kind = "grao" if args.grao else "rao"
    report.verdict(kind, tree is not None)
    if tree is None:
        report.witness(kind, [list(t) for t in rao_pair_obstructions(poset)])
    elif args.certificate:
        with open(args.certificate, "w") as fh:
            json.dump(tree.to_json(), fh, indent=2)
    report.timing("atoms", len(poset.atoms()))


def _cmd_shelling_verify(args, report):
    ref = args.complex_or_poset
    poset = None
    if ref.startswith("corpus:"):
        poset = _resolve_poset(ref)
        complex_ = order_complex(poset)
    else:
        data = _load_json(ref)
        if "elements" in data:
            poset = poset_from_json(data)
            complex_ = order_complex(poset)
        else:
            complex_ = complex_from_json(data)
    if args.order_file:
        with open(args.order_file) as fh:
            order = [frozenset(line.split()) for line in fh if line.strip()]
    elif args.from_labeling:
        if poset is None:
            raise ShellabError("--from-labeling needs a poset input")
        lab = _resolve_labeling(poset, args.from_labeling, args.max_rooted_covers)
        order = [frozenset(c) for c in lex_order_max_chains(lab, poset, tie_break=True)]
    else:
        if poset is None:
            raise ShellabError("--from-rfas needs a poset input")
        omega = _resolve_first_atom_set(poset, args.from_rfas, args.max_rooted_covers)
        order = [frozenset(c) for c in shelling_from_rfas(poset, omega)]
    result = is_shelling(complex_, order)
    report.verdict("shelling", result.ok)
    if not result.ok:
        report.witness("shelling", {"violation_at": list(result.first_violation)})
    report.timing("facets", len(complex_.facets))


def _cmd_corpus(args, report):
    if args.name:
        ex = corpus.load_named(args.name)
        report.line(json.dumps({
            "name": ex.name,
            "comment": ex.comment,
            "elements": len(ex.poset.elements),
            "covers": len(ex.poset.covers),
            "labelings": sorted(ex.labelings),
            "first_atom_sets": sorted(ex.first_atom_sets),
        }, indent=2))
    else:
        for name in corpus.names():
            report.line(name)
    report.verdict("corpus", True)


def _cmd_export_dot(args, report):
    poset = _resolve_poset(args.poset)
    dot = to_dot(poset)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
    else:
        report.line(dot.rstrip("\n"))
    report.verdict("exported", True)


_COMMANDS = {
    "chains": _cmd_chains,
    "check": _cmd_check,
    "relabel": _cmd_relabel,
    "rfas-check": _cmd_rfas_check,
    "rfas-shell": _cmd_rfas_shell,
    "rfas-from-tcl": _cmd_rfas_from_tcl,
    "lc-check": _cmd_lc_check,
    "rao": _cmd_rao,
    "shelling-verify": _cmd_shelling_verify,
    "corpus": _cmd_corpus,
    "export-dot": _cmd_export_dot,
}


def run(argv) -> int:
    """Parse argv (without the program name) and execute; returns exit code."""
    args = build_parser().parse_args(argv)
    inputs = {
        k: v for k, v in sorted(vars(args).items())
        if k not in {"subcommand", "json"} and v is not None
    }
    report = Report(args.subcommand, inputs)
    try:
        _COMMANDS[args.subcommand](args, report)
    except ShellabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return report.emit(args.json)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
