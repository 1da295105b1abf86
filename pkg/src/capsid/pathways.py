"""From fixed-tree counts to the distribution of assembly pathways.

For a group acting simply on the leaf set, t(H) counts the trees fixed by a
subgroup H and is supplied by the generating functions.  Moebius inversion
over the subgroup lattice turns it into tbar(H), the number of trees whose
stabilizer is exactly H; summing tbar over the subgroups of index m and
dividing by m gives N(m), the number of pathways (orbits) of size m, and
each such pathway has probability m / (total number of trees).

Every division here must be exact; a remainder aborts with a diagnostic
rather than rounding.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from . import series
from .lattice import SubgroupLattice, build_lattice
from .perms import (PermGroup, close_generators, icosahedral_group,
                    replicated_action)


@dataclass(frozen=True)
class SubgroupClassRow:
    """Per-conjugacy-class numbers feeding the distribution."""
    representative: PermGroup
    order: int
    index: int           # (G:H), the orbit size of trees stabilized exactly here
    class_size: int
    fixed_count: int     # t(H)
    exact_count: int     # tbar(H)


@dataclass(frozen=True)
class PathwayDistribution:
    """The full pathway-size distribution for one simple action."""
    group: PermGroup
    leaf_count: int
    total_trees: int
    per_divisor: dict[int, int]                  # m -> N(m), all divisors of |G|
    per_subgroup_class: tuple[SubgroupClassRow, ...]

    @property
    def pathway_total(self) -> int:
        return sum(self.per_divisor.values())


def tbar(group: PermGroup, sub: PermGroup,
         t: Union[Callable[[PermGroup], int], dict],
         lat: Optional[SubgroupLattice] = None,
         max_order: Optional[int] = None) -> int:
    """Moebius inversion at one subgroup: the number of trees fixed by sub
    and by nothing larger, given t on every supergroup."""
    if lat is None:
        lat = build_lattice(group, max_order)
    lookup = t.__getitem__ if isinstance(t, dict) else t
    value = sum(lat.mobius_value(sub, over) * lookup(over)
                for over in lat.interval_above(sub))
    if value < 0:
        raise ArithmeticError(
            f"negative inverted count {value} for a subgroup of order {sub.order}; "
            "the supplied t values are inconsistent")
    return value


def pathway_size_distribution(group: PermGroup,
                              max_order: Optional[int] = None,
                              lat: Optional[SubgroupLattice] = None
                              ) -> PathwayDistribution:
    """Compute N(m) for every divisor m of the group order, from the
    generating-function counts and Moebius inversion."""
    if not group.is_simple_action():
        raise ValueError("the group action is not simple")
    leaf_count = group.degree
    if lat is None:
        lat = build_lattice(group, max_order)

    # every subgroup acts simply as well, with leaf_count / |K| orbits
    t_by_class: dict[PermGroup, int] = {}
    for cls in lat.classes:
        rep = cls.representative
        if leaf_count % rep.order:
            raise ArithmeticError(
                "leaf count is not a multiple of a subgroup order; "
                "the action cannot be simple")
        t_by_class[rep] = series.fixed_tree_count(
            rep, leaf_count // rep.order, max_order)

    def t_of(sub: PermGroup) -> int:
        return t_by_class[lat.class_of(sub).representative]

    rows = []
    for cls in lat.classes:
        rep = cls.representative
        value = tbar(group, rep, t_of, lat)
        rows.append(SubgroupClassRow(
            representative=rep,
            order=rep.order,
            index=group.order // rep.order,
            class_size=cls.size,
            fixed_count=t_by_class[rep],
            exact_count=value,
        ))
    rows.sort(key=lambda r: (r.order, -r.class_size))

    per_divisor: dict[int, int] = {}
    for m in _divisors(group.order):
        total = sum(r.exact_count * r.class_size for r in rows if r.index == m)
        if total % m:
            raise ArithmeticError(
                f"pathway count for size {m} is not integral ({total}/{m})")
        per_divisor[m] = total // m

    total_trees = series.fixed_tree_count(lat.nodes[0], leaf_count)
    weighted = sum(m * n for m, n in per_divisor.items())
    if weighted != total_trees:
        raise ArithmeticError(
            f"pathway sizes cover {weighted} trees but there are {total_trees}")
    return PathwayDistribution(group, leaf_count, total_trees,
                               per_divisor, tuple(rows))


def pathway_probabilities(dist: PathwayDistribution) -> dict[int, Fraction]:
    """For each occurring pathway size m, the exact probability m / |T_X| of
    each of the N(m) pathways of that size."""
    return {m: Fraction(m, dist.total_trees)
            for m, n in sorted(dist.per_divisor.items()) if n}


def burnside_pathway_total(group: PermGroup,
                           max_order: Optional[int] = None) -> int:
    """Orbit count by averaging fixed-tree counts over the group: each
    element g fixes exactly t(<g>) trees, where <g> is the cyclic group it
    generates."""
    leaf_count = group.degree
    total = 0
    for g in group.elements:
        cyclic = close_generators([g], group.degree)
        total += series.fixed_tree_count(cyclic, leaf_count // cyclic.order,
                                         max_order)
    if total % group.order:
        raise ArithmeticError("Burnside average is not integral")
    return total // group.order


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


# -- the end-to-end icosahedral report ---------------------------------------

def icosahedral_report(t_number: int = 1,
                       max_order: Optional[int] = None) -> PathwayDistribution:
    """The pathway distribution of the order-60 icosahedral rotation group
    acting simply on 60 * T facets.

    Only T=1 has published reference values; other T are computed with the
    same machinery but carry a warning.
    """
    if t_number < 1:
        raise ValueError("T must be >= 1")
    if t_number != 1:
        warnings.warn("no published reference values exist for T != 1",
                      stacklevel=2)
    group = icosahedral_group()
    if t_number > 1:
        group = replicated_action(group, t_number)
    return pathway_size_distribution(group, max_order)


def format_distribution(dist: PathwayDistribution) -> str:
    """Human-readable report: per-class counts, the size distribution, the
    probabilities, and consistency totals."""
    lines = []
    lines.append(f"leaves: {dist.leaf_count}")
    lines.append(f"group order: {dist.group.order}")
    lines.append(f"total trees: {dist.total_trees}")
    lines.append("")
    lines.append("subgroup classes (order, class size, orbit size m, "
                 "fixed t, exactly-fixed tbar):")
    header = f"{'order':>6} {'#subs':>6} {'m':>6}  {'t':<60} tbar"
    lines.append(header)
    for row in dist.per_subgroup_class:
        lines.append(f"{row.order:>6} {row.class_size:>6} {row.index:>6}  "
                     f"{row.fixed_count:<60} {row.exact_count}")
    lines.append("")
    lines.append("pathway sizes (m, N(m), probability of each):")
    probs = pathway_probabilities(dist)
    for m, n in sorted(dist.per_divisor.items()):
        if n == 0:
            continue
        lines.append(f"{m:>6} {n:<60} {probs[m]}")
    lines.append("")
    lines.append(f"pathways total: {dist.pathway_total}")
    lines.append(f"sum of m * N(m): "
                 f"{sum(m * n for m, n in dist.per_divisor.items())}")
    sizes = [m for m, n in sorted(dist.per_divisor.items()) if n]
    if len(sizes) > 1:
        small, large = sizes[0], sizes[-1]
        ratio = Fraction(large, small)
        count_ratio = Fraction(dist.per_divisor[large], dist.per_divisor[small])
        magnitude = len(str(count_ratio.numerator // count_ratio.denominator)) - 1
        lines.append("")
        lines.append(
            f"each size-{large} pathway is {ratio} times more probable than a "
            f"size-{small} one, but there are about 10^{magnitude} times more of them "
            f"(N({large})/N({small}) = {count_ratio})")
    return "\n".join(lines) + "\n"
