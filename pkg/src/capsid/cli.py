"""Command-line interface.

Every subcommand validates its inputs before computing, writes deterministic
bytes for fixed inputs, and turns any library error into a one-line
diagnostic with a nonzero exit code.  Big integers are always printed in
full decimal.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional

from . import fixed_trees as ft
from . import pathways as pw
from . import series as sr
from . import trees as tr
from .lattice import build_lattice
from .stabilizer import fixes, stabilizer
from .perms import DEFAULT_MAX_GROUP_ORDER, PermGroup, builtin_group, \
    group_from_text, parse_permutation

def load_group(name_or_path: str) -> PermGroup:
    """Resolve --group arguments: a builtin name or a path to a group file."""
    if name_or_path in ("klein4", "icosahedral") or \
            name_or_path.startswith(("cyclic:", "trivial:")):
        return builtin_group(name_or_path)
    path = Path(name_or_path)
    if path.is_file():
        return group_from_text(path.read_text())
    raise ValueError(
        f"unknown group {name_or_path!r}: not a builtin name and not a file")


def _table(rows: list[tuple], header: tuple, fmt: str) -> str:
    if fmt == "csv":
        lines = [",".join(header)]
        lines += [",".join(str(c) for c in row) for row in rows]
        return "\n".join(lines) + "\n"
    cells = [tuple(str(c) for c in row) for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) if cells else len(h)
              for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(widths[i]) for i, h in enumerate(header))]
    for row in cells:
        lines.append("  ".join(row[i].rjust(widths[i]) for i in range(len(row))))
    return "\n".join(lines) + "\n"


def _blocks_text(system: ft.BlockSystem) -> str:
    return " ".join("{" + ",".join(str(x) for x in sorted(b)) + "}"
                    for b in system.blocks)


# -- subcommand implementations ----------------------------------------------

def _cmd_fixes(args, max_order) -> int:
    group = load_group(args.group)
    perm = parse_permutation(args.perm, group.degree)
    tau = tr.parse_tree(args.tree)
    print("true" if fixes(perm, tau) else "false")
    return 0


def _cmd_stabilizer(args, max_order) -> int:
    group = load_group(args.group)
    tau = tr.parse_tree(args.tree)
    result = stabilizer(group, tau)
    print("generators:", " ".join(p.cycle_string() for p in result.generators))
    print("order:", result.order)
    print("orbit-size:", group.order // result.order)
    return 0


def _cmd_fixed_trees(args, max_order) -> int:
    group = load_group(args.group)
    if args.count_only:
        print(ft.count_fixed_trees_direct(group, max_order))
    else:
        for text in sorted(t.to_text() for t in ft.generate_fixed_trees(group, max_order)):
            print(text)
    return 0


def _cmd_series(args, max_order) -> int:
    group = load_group(args.group)
    if group.order == 1:
        ps = sr.base_tree_series(args.order)
    else:
        ps = sr.fixed_tree_series(group, args.order, max_order)
    rows = []
    for n in range(1, args.order + 1):
        row = (n, n * group.order, ps.count(n))
        if args.egf:
            row += (ps[n],)
        rows.append(row)
    header = ("n", "leaves", "count") + (("egf",) if args.egf else ())
    sys.stdout.write(_table(rows, header, args.format))
    return 0


def _cmd_pathways(args, max_order) -> int:
    group = load_group(args.group)
    dist = pw.pathway_size_distribution(group, max_order)
    probs = pw.pathway_probabilities(dist)
    rows = [(m, n, probs[m]) for m, n in sorted(dist.per_divisor.items()) if n]
    sys.stdout.write(_table(rows, ("m", "pathways", "probability"), args.format))
    return 0


def _cmd_icosa_report(args, max_order) -> int:
    dist = pw.icosahedral_report(args.T, max_order)
    sys.stdout.write(pw.format_distribution(dist))
    print()
    print("mobius matrix (CSV):")
    sys.stdout.write(build_lattice(dist.group, max_order).to_csv())
    return 0


def _cmd_blocks(args, max_order) -> int:
    group = load_group(args.group)
    systems = ft.enumerate_block_systems(group, max_order)
    if args.format == "csv":
        rows = [(i + 1, len(s.blocks), _blocks_text(s).replace(" ", "|"))
                for i, s in enumerate(systems)]
        sys.stdout.write(_table(rows, ("system", "block_count", "blocks"), "csv"))
    else:
        for s in systems:
            print(_blocks_text(s))
    return 0


def _cmd_mobius(args, max_order) -> int:
    group = load_group(args.group)
    sys.stdout.write(build_lattice(group, max_order).to_csv())
    return 0


def _cmd_enumerate_trees(args, max_order) -> int:
    if (args.n is None) == (args.labels is None):
        raise ValueError("give exactly one of --n and --labels")
    if args.n is not None:
        labels = range(1, args.n + 1)
    else:
        try:
            labels = [int(x) for x in args.labels.split(",")]
        except ValueError:
            raise ValueError(f"malformed label list {args.labels!r}") from None
    stream = tr.enumerate_all_trees(labels)
    if args.count_only:
        print(sum(1 for _ in stream))
    else:
        for tree in stream:
            print(tree.to_text())
    return 0


# -- argument parsing ----------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="capsid",
        description="Exact assembly-pathway enumeration for groups acting "
                    "simply on a finite set.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    def group_arg(p):
        p.add_argument("--group", required=True,
                       help="builtin name (klein4, icosahedral, cyclic:k, "
                            "trivial:n) or path to a group file "
                            "('degree N' line, then one generator per line)")

    def format_arg(p):
        p.add_argument("--format", choices=("plain", "csv"), default="plain")

    p = add("fixes", _cmd_fixes, "does a permutation fix an assembly tree")
    group_arg(p)
    p.add_argument("--perm", required=True, help="permutation in cycle notation")
    p.add_argument("--tree", required=True, help="tree text, e.g. ((1,2),3,4)")

    p = add("stabilizer", _cmd_stabilizer, "stabilizer of a tree in a group")
    group_arg(p)
    p.add_argument("--tree", required=True, help="tree text, e.g. ((1,2),3,4)")

    p = add("fixed-trees", _cmd_fixed_trees,
            "all trees fixed by the whole group")
    group_arg(p)
    p.add_argument("--count-only", action="store_true")

    p = add("series", _cmd_series, "fixed-tree counts from the generating function")
    group_arg(p)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--egf", action="store_true",
                   help="also print the raw rational EGF coefficients")
    format_arg(p)

    p = add("pathways", _cmd_pathways, "pathway-size distribution and probabilities")
    group_arg(p)
    format_arg(p)

    p = add("icosa-report", _cmd_icosa_report,
            "end-to-end icosahedral report plus the Moebius matrix")
    p.add_argument("--T", type=int, default=1,
                   help="number of orbits (60T facets); only T=1 has "
                        "reference values")

    p = add("blocks", _cmd_blocks, "compatible block systems of a simple action")
    group_arg(p)
    format_arg(p)

    p = add("mobius", _cmd_mobius, "Moebius matrix of the subgroup lattice as CSV")
    group_arg(p)

    p = add("enumerate-trees", _cmd_enumerate_trees,
            "brute-force stream of all assembly trees")
    p.add_argument("--n", type=int, help="use labels 1..n")
    p.add_argument("--labels", help="comma-separated labels, e.g. 2,5,7")
    p.add_argument("--count-only", action="store_true")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    max_order = None
    env = os.environ.get("CAPSID_MAX_GROUP_ORDER")
    if env is not None:
        try:
            max_order = int(env)
        except ValueError:
            print(f"error: CAPSID_MAX_GROUP_ORDER must be an integer, got {env!r}",
                  file=sys.stderr)
            return 1
    if max_order is None:
        max_order = DEFAULT_MAX_GROUP_ORDER
    try:
        return args.func(args, max_order)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
