"""Exact truncated exponential generating functions and the functional
equations counting fixed assembly trees.

Everything here is Fraction arithmetic over Python's big integers; no
floating point.  A series with coefficients c_0..c_N represents an EGF, so
the count at index n is c_n * n!.

The base equation, with f the EGF of all assembly-tree counts, is

    1 - x + 2 f(x) = exp(f(x))

and for a group G of order > 1 acting simply, with one summand per subgroup,

    1 + 2 f_G(x) = exp( sum over H <= G of f_H((G:H) x) / (G:H) ).

Both are solved coefficient by coefficient: the unknown enters the right
side linearly through the exponential's degree-one term, so each new
coefficient is determined by lower-order data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .perms import PermGroup, find_isomorphism, group_fingerprint


@dataclass(frozen=True)
class PowerSeries:
    """A truncated EGF with exact rational coefficients c_0..c_order."""
    order: int
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) != self.order + 1:
            raise ValueError("coefficient count must be order + 1")

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def count(self, n: int) -> int:
        """The integer count c_n * n!; raises if it is not a non-negative
        integer, which would mean a solver bug upstream."""
        value = self.coefficients[n] * math.factorial(n)
        if value.denominator != 1 or value < 0:
            raise ArithmeticError(
                f"coefficient {n} gives non-integer or negative count {value}")
        return int(value)

    def counts(self) -> list[int]:
        return [self.count(n) for n in range(self.order + 1)]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a series by truncation")
        return PowerSeries(order, self.coefficients[:order + 1])


def zero_series(order: int) -> PowerSeries:
    return PowerSeries(order, (Fraction(0),) * (order + 1))


def constant_series(value, order: int) -> PowerSeries:
    return PowerSeries(order, (Fraction(value),) + (Fraction(0),) * order)


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_orders(a, b)
    return PowerSeries(a.order, tuple(x + y for x, y in
                                      zip(a.coefficients, b.coefficients)))


def series_sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_orders(a, b)
    return PowerSeries(a.order, tuple(x - y for x, y in
                                      zip(a.coefficients, b.coefficients)))


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_orders(a, b)
    n = a.order
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a.coefficients):
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = b.coefficients[j]
            if bj:
                out[i + j] += ai * bj
    return PowerSeries(n, tuple(out))


def scalar_mul(a: PowerSeries, q) -> PowerSeries:
    q = Fraction(q)
    return PowerSeries(a.order, tuple(q * c for c in a.coefficients))


def scale_argument(a: PowerSeries, k: int) -> PowerSeries:
    """The series a(kx): multiplies c_n by k**n."""
    if k < 1:
        raise ValueError("argument scale must be a positive integer")
    return PowerSeries(a.order,
                       tuple(c * k ** n for n, c in enumerate(a.coefficients)))


def series_exp(a: PowerSeries) -> PowerSeries:
    """exp(a) for a series with zero constant term.

    Uses b_n = (1/n) * sum_{k=1..n} k a_k b_{n-k}, the recurrence from
    b' = a' b.
    """
    if a.coefficients[0] != 0:
        raise ValueError("series_exp needs a zero constant term")
    n = a.order
    b = [Fraction(1)] + [Fraction(0)] * n
    ac = a.coefficients
    for m in range(1, n + 1):
        b[m] = sum((k * ac[k] * b[m - k] for k in range(1, m + 1)),
                   Fraction(0)) / m
    return PowerSeries(n, tuple(b))


def _check_orders(a: PowerSeries, b: PowerSeries) -> None:
    if a.order != b.order:
        raise ValueError("truncation orders differ")


# -- the tree-count solvers --------------------------------------------------

_BASE_CACHE: list[PowerSeries] = []
# fingerprint -> list of (representative group, best series so far)
_GROUP_CACHE: dict[tuple, list] = {}


def base_tree_series(order: int) -> PowerSeries:
    """The EGF of the total assembly-tree counts 1, 1, 4, 26, 236, 2752, ...

    Solved from 1 - x + 2 f = exp(f) with f(0) = 0.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    if _BASE_CACHE and _BASE_CACHE[0].order >= order:
        return _BASE_CACHE[0].truncate(order)
    c = [Fraction(0)] * (order + 1)   # coefficients of f
    b = [Fraction(1)] + [Fraction(0)] * order   # coefficients of exp(f)
    c[1] = Fraction(1)
    b[1] = Fraction(1)
    for n in range(2, order + 1):
        c[n] = sum((k * c[k] * b[n - k] for k in range(1, n)), Fraction(0)) / n
        b[n] = 2 * c[n]
    series = PowerSeries(order, tuple(c))
    _BASE_CACHE[:] = [series]
    return series


def tree_count(n: int) -> int:
    """The number of assembly trees on n labeled leaves."""
    return base_tree_series(n).count(n)


def subgroup_summands(group: PermGroup,
                      max_order: Optional[int] = None) -> list[tuple[int, PermGroup]]:
    """The (index, subgroup) pairs whose scaled series sum sits inside the
    exponential of the group's functional equation; one entry per subgroup,
    the group itself included."""
    return [(group.order // sub.order, sub)
            for sub in group.all_subgroups(max_order)]


def fixed_tree_series(group: PermGroup, order: int,
                      max_order: Optional[int] = None) -> PowerSeries:
    """The EGF of t_n(G): the number of assembly trees on n*|G| leaves fixed
    by every element of G, for a group of order > 1 acting simply.

    Series are shared between isomorphic groups (the counts only depend on
    the abstract group, since a simple action is a disjoint union of regular
    ones).
    """
    if group.order == 1:
        raise ValueError("use base_tree_series for the trivial group")
    if order < 1:
        raise ValueError("order must be >= 1")
    cached = _cache_lookup(group, order)
    if cached is not None:
        return cached

    w = [Fraction(0)] * (order + 1)
    for index, sub in subgroup_summands(group, max_order):
        if sub.order == group.order:
            continue
        sub_series = _series_for(sub, order, max_order)
        for n in range(1, order + 1):
            # (1/index) * f_H(index * x)
            w[n] += sub_series[n] * index ** (n - 1)

    c = [Fraction(0)] * (order + 1)   # coefficients of f_G
    a = [Fraction(0)] * (order + 1)   # coefficients of f_G + w
    b = [Fraction(1)] + [Fraction(0)] * order   # coefficients of exp(a)
    for n in range(1, order + 1):
        c[n] = w[n] + sum((k * a[k] * b[n - k] for k in range(1, n)),
                          Fraction(0)) / n
        a[n] = c[n] + w[n]
        b[n] = 2 * c[n]
    series = PowerSeries(order, tuple(c))
    _cache_store(group, series)
    return series


def _series_for(group: PermGroup, order: int,
                max_order: Optional[int]) -> PowerSeries:
    if group.order == 1:
        return base_tree_series(order)
    return fixed_tree_series(group, order, max_order)


def _cache_lookup(group: PermGroup, order: int) -> Optional[PowerSeries]:
    fp = group_fingerprint(group)
    for rep, series in _GROUP_CACHE.get(fp, ()):
        if series.order >= order and find_isomorphism(group, rep) is not None:
            return series.truncate(order)
    return None


def _cache_store(group: PermGroup, series: PowerSeries) -> None:
    fp = group_fingerprint(group)
    entries = _GROUP_CACHE.setdefault(fp, [])
    for i, (rep, old) in enumerate(entries):
        if find_isomorphism(group, rep) is not None:
            if series.order > old.order:
                entries[i] = (rep, series)
            return
    entries.append((group, series))


def fixed_tree_count(group: PermGroup, n: int,
                     max_order: Optional[int] = None) -> int:
    """t_n(G): the number of assembly trees on n*|G| leaves fixed by G.

    For the trivial group this is the total count of trees on n leaves.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if group.order == 1:
        return tree_count(n)
    return fixed_tree_series(group, n, max_order).count(n)


def verify_functional_equation(group: PermGroup, series: PowerSeries,
                               max_order: Optional[int] = None) -> bool:
    """Substitute a solved series back into its defining equation; the
    residual must vanish through the truncation order."""
    order = series.order
    total = zero_series(order)
    for index, sub in subgroup_summands(group, max_order):
        if sub.order == group.order:
            inner = series
        else:
            inner = _series_for(sub, order, max_order)
        total = series_add(total,
                           scalar_mul(scale_argument(inner, index),
                                      Fraction(1, index)))
    lhs = series_add(constant_series(1, order), scalar_mul(series, 2))
    return series_sub(series_exp(total), lhs) == zero_series(order)
