"""Command-line interface.

Subcommands cover classification against the shellable families, even-poset
reports, shellability certificates, falling-chain listings, homology of the
proper-part complex, Betti vectors of real toric spaces, the closed-form
Betti table of two-edge bundle paths, and non-shellable witness search.

Exit codes: 0 for a successful report, 2 for usage errors (unknown command,
unreadable file, malformed or inadmissible set), 3 for an exceeded search or
size budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import InconclusiveSearch, family_of, non_shellable_witness
from .evenposet import NULL_POSET, even_poset
from .homology import SizeBudgetExceeded, integral_reduced_homology
from .multigraph import Multigraph, parse_graph
from .shellability import (
    FacetBudgetExceeded,
    RaoLabeling,
    SearchBudgetExceeded,
    atom_ordering,
    even_poset_labeling,
    falling_chains,
    falling_counts_by_length,
    find_recursive_atom_ordering,
    is_shellable_bruteforce,
    verify_recursive_atom_ordering,
)
from .toric import TABLE_COLUMNS, betti_general, table4

DEFAULT_BUDGET = 10**7
BRUTE_FACET_CAP = 22

_BUDGET_ERRORS = (
    SearchBudgetExceeded,
    SizeBudgetExceeded,
    FacetBudgetExceeded,
    InconclusiveSearch,
)


class UsageError(Exception):
    """Bad invocation: unreadable input, malformed or inadmissible set."""


def _json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _load_graph(path: str) -> Multigraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e}") from e
    try:
        return parse_graph(text)
    except ValueError as e:
        raise UsageError(f"{path}: {e}") from e


def _even_poset_arg(g: Multigraph, args):
    if args.A is None:
        raise UsageError("--A is required for this command")
    try:
        a = g.parse_set(args.A)
    except ValueError as e:
        raise UsageError(str(e)) from e
    ep = even_poset(g, a)
    if ep is NULL_POSET:
        raise UsageError(f"set {g.format_set(a) if a else '∅'} is not admissible")
    return ep


def _require_format(args, *allowed: str):
    if args.format not in allowed:
        raise UsageError(
            f"format {args.format!r} is not supported here (choose from {', '.join(allowed)})"
        )


# ------------------------------------------------------------- subcommands


def _cmd_classify(args) -> str:
    g = _load_graph(args.graph)
    _require_format(args, "json")
    tags = [family_of(c) for c in g.components()]
    return _json(
        {
            "in_g_star": all(t is not None for t in tags),
            "components": [str(t) if t is not None else "Unrecognized" for t in tags],
        }
    )


def _cmd_poset(args) -> str:
    g = _load_graph(args.graph)
    _require_format(args, "json", "dot")
    ep = _even_poset_arg(g, args)
    if args.format == "dot":
        return ep.to_dot()
    return _json(ep.to_json_dict())


def _cmd_shell(args) -> str:
    g = _load_graph(args.graph)
    _require_format(args, "json")
    ep = _even_poset_arg(g, args)
    p = ep.poset
    ordering = None
    try:
        candidate = atom_ordering(ep)
        if verify_recursive_atom_ordering(p, candidate) is True:
            ordering = candidate
    except ValueError:
        pass
    if ordering is None:
        ordering = find_recursive_atom_ordering(p, budget=args.budget)
    report: dict = {"admissible": ep.host.format_set(ep.admissible)}
    if ordering is not None:
        lab = RaoLabeling(p, ordering)
        chains = falling_chains(p, lab)
        counts = falling_counts_by_length(chains)
        report.update(
            {
                "shellable": True,
                "method": "recursive_atom_ordering",
                "certificate": {
                    ep.format_element(i): [
                        ep.format_element(j) for j in ordering.order_of(i)
                    ]
                    for i in range(len(p))
                    if i != p.top
                },
                "falling_chains": [
                    "<".join(ep.format_element(x) for x in ch) for ch in chains
                ],
                "counts_by_length": {
                    str(k): v for k, v in sorted(counts.items())
                },
            }
        )
        return _json(report)
    order = is_shellable_bruteforce(ep.proper_complex(), max_facets=BRUTE_FACET_CAP)
    if order is not None:
        report.update(
            {
                "shellable": True,
                "method": "shelling_order",
                "certificate": [
                    sorted(g.format_set(x) for x in facet) for facet in order
                ],
            }
        )
    else:
        report.update(
            {"shellable": False, "method": "exhaustive", "certificate": None}
        )
    return _json(report)


def _cmd_falling(args) -> str:
    g = _load_graph(args.graph)
    _require_format(args, "json", "csv")
    ep = _even_poset_arg(g, args)
    try:
        lab = even_poset_labeling(ep, verify=True)
    except ValueError as e:
        raise UsageError(str(e)) from e
    chains = falling_chains(ep.poset, lab)
    rendered = [[ep.format_element(i) for i in chain] for chain in chains]
    if args.format == "json":
        return _json(
            {
                "admissible": ep.host.format_set(ep.admissible),
                "chains": rendered,
                "count": len(rendered),
            }
        )
    return "".join("<".join(chain) + "\n" for chain in rendered)


def _cmd_homology(args) -> str:
    g = _load_graph(args.graph)
    _require_format(args, "json")
    ep = _even_poset_arg(g, args)
    summary = integral_reduced_homology(ep.proper_complex(), max_faces=args.budget)
    return _json(summary.to_json_dict())


def _cmd_betti(args) -> str:
    g = _load_graph(args.graph)
    _require_format(args, "json", "csv")
    try:
        beta = betti_general(g, jobs=args.jobs)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if args.format == "csv":
        return ",".join(str(x) for x in beta) + "\n"
    return _json({"betti": list(beta)})


def _cmd_table4(args) -> str:
    _require_format(args, "csv", "json")
    rows = table4()
    if args.format == "json":
        return _json({"columns": list(TABLE_COLUMNS), "rows": rows})
    lines = ["i," + ",".join(str(n) for n in TABLE_COLUMNS)]
    for i, row in enumerate(rows):
        lines.append(f"{i}," + ",".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def _cmd_witness(args) -> str:
    g = _load_graph(args.graph)
    _require_format(args, "json")
    found = non_shellable_witness(g, budget=args.budget)
    if found is None:
        return _json({"witness": None})
    pi, a, (x, y) = found
    h = pi.graph
    return _json(
        {
            "witness": {
                "vertices": sorted(pi.vertex_set),
                "replaced_bundles": [
                    [g.bundles[i].u, g.bundles[i].v] for i in sorted(pi.replaced)
                ],
                "admissible": h.format_set(a),
                "interval": [h.format_set(x), h.format_set(y)],
            }
        }
    )


# ------------------------------------------------------------------ parser


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evenposets",
        description="Even posets, shellability, and real toric space invariants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str, *, graph=True, default_format="json"):
        sp = sub.add_parser(name, help=help_)
        if graph:
            sp.add_argument("graph", help="path to a graph file")
        sp.add_argument("--A", help="admissible set as space-separated tokens")
        sp.add_argument(
            "--format",
            choices=("json", "csv", "dot"),
            default=default_format,
            help=f"output format (default {default_format})",
        )
        sp.add_argument(
            "--budget",
            type=int,
            default=DEFAULT_BUDGET,
            help="search/size budget in nodes",
        )
        sp.add_argument(
            "--jobs", type=int, default=1, help="parallel workers for pair sums"
        )
        sp.add_argument("--out", help="write the report to this path")
        sp.set_defaults(func=func)
        return sp

    add("classify", _cmd_classify, "match components against the shellable families")
    add("poset", _cmd_poset, "even poset of an admissible set")
    add("shell", _cmd_shell, "shellability certificate for an even poset")
    add("falling", _cmd_falling, "falling chains of a family pair", default_format="csv")
    add("homology", _cmd_homology, "reduced homology of the proper-part complex")
    add("betti", _cmd_betti, "Betti vector of the real toric space")
    add("table4", _cmd_table4, "Betti table of two-edge bundle paths", graph=False,
        default_format="csv")
    add("witness", _cmd_witness, "search for a non-shellable interval")
    return parser


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        text = args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except _BUDGET_ERRORS as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return 3
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as e:
            print(f"error: cannot write {args.out}: {e}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
