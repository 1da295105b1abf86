"""Permutations of {1..N} and small finite permutation groups.

Groups are stored with their full element set; everything is exact and
deterministic.  The composition convention, fixed once for the whole
package, is

    (p * q)(x) == p(q(x))

i.e. the right factor acts first.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_MAX_GROUP_ORDER = 120

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A bijection of the points 1..N.

    ``images[i]`` is the image of point ``i + 1`` (points are 1-based).
    Instances are immutable, hashable, and totally ordered by the image
    sequence; that order is what makes every group computation in this
    package reproducible.
    """

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if not images:
            raise ValueError("a permutation needs degree >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"images {images!r} are not a bijection of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(1, degree + 1))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        if not 1 <= point <= len(self.images):
            raise ValueError(f"point {point} out of range 1..{len(self.images)}")
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch in composition")
        simg = self.images
        return Permutation(simg[o - 1] for o in other.images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images):
            inv[v - 1] = i + 1
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles()))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length >= 2, each starting at its minimum."""
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self.images[start - 1]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self.images[nxt - 1]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycs)

    def moved_points(self) -> frozenset[int]:
        return frozenset(i + 1 for i, v in enumerate(self.images) if v != i + 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __repr__(self) -> str:
        return f"Permutation[{self.cycle_string()}]"


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse cycle notation like ``(1 2)(3 4)`` into a permutation of 1..degree.

    Fixed points may be omitted or written as 1-cycles; the empty string and
    ``()`` denote the identity.  Points may be separated by whitespace or
    commas.
    """
    if degree < 1:
        raise ValueError("degree must be >= 1")
    stripped = text.strip()
    body = _CYCLE_RE.sub("", stripped)
    if body.strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = list(range(1, degree + 1))
    seen: set[int] = set()
    for match in _CYCLE_RE.finditer(stripped):
        tokens = [t for t in re.split(r"[\s,]+", match.group(1).strip()) if t]
        points = []
        for tok in tokens:
            if not tok.isdigit():
                raise ValueError(f"malformed cycle notation: {text!r}")
            points.append(int(tok))
        for p in points:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range 1..{degree}")
            if p in seen:
                raise ValueError(f"point {p} repeated across cycles")
            seen.add(p)
        for i, p in enumerate(points):
            images[p - 1] = points[(i + 1) % len(points)]
    return Permutation(images)


class PermGroup:
    """A finite permutation group on {1..degree} with an explicit element set.

    Elements are kept in lexicographic order of their image sequences (so the
    identity is always first), and that canonical order is relied on for
    deterministic coset representatives, regular actions, and output.

    Instances are immutable after construction; the private attributes only
    cache derived data.  Use :func:`close_generators` to build one.
    """

    __slots__ = ("degree", "generators", "elements", "_eset", "_ekey", "_index",
                 "_table", "_inverse", "_subgroups", "_classes", "_orbits")

    def __init__(self, degree: int, generators: Sequence[Permutation],
                 elements: Sequence[Permutation]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(sorted(set(elements)))
        if not self.elements or not self.elements[0].is_identity():
            raise ValueError("element set must contain the identity")
        for p in self.generators + self.elements:
            if p.degree != degree:
                raise ValueError("degree mismatch inside group")
        self._eset = frozenset(p.images for p in self.elements)
        self._ekey: Optional[frozenset] = None
        self._index: Optional[dict] = None
        self._table: Optional[list] = None
        self._inverse: Optional[list] = None
        self._subgroups: Optional[tuple] = None
        self._classes: Optional[tuple] = None
        self._orbits: Optional[list] = None

    # -- basic queries ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return self.elements[0]

    @property
    def element_key(self) -> frozenset:
        """Canonical identity of the subgroup: the frozenset of image tuples."""
        if self._ekey is None:
            self._ekey = self._eset
        return self._ekey

    def __contains__(self, perm: Permutation) -> bool:
        return perm.degree == self.degree and perm.images in self._eset

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PermGroup) and self.degree == other.degree
                and self._eset == other._eset)

    def __hash__(self) -> int:
        return hash((self.degree, self._eset))

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self._eset <= other._eset

    def element_order_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for p in self.elements:
            hist[p.order()] = hist.get(p.order(), 0) + 1
        return hist

    # -- index machinery (internal) ---------------------------------------

    def _elem_index(self) -> dict:
        if self._index is None:
            self._index = {p.images: i for i, p in enumerate(self.elements)}
        return self._index

    def _mul_table(self) -> list[list[int]]:
        """table[i][j] = index of elements[i] * elements[j]."""
        if self._table is None:
            idx = self._elem_index()
            els = self.elements
            self._table = [[idx[(a * b).images] for b in els] for a in els]
        return self._table

    def _inv_vector(self) -> list[int]:
        if self._inverse is None:
            idx = self._elem_index()
            self._inverse = [idx[p.inverse().images] for p in self.elements]
        return self._inverse

    def _subgroup_from_indices(self, indices: Iterable[int],
                               gen_indices: Iterable[int] = ()) -> "PermGroup":
        els = [self.elements[i] for i in indices]
        gens = [self.elements[i] for i in gen_indices]
        return PermGroup(self.degree, gens, els)

    # -- orbits and action properties --------------------------------------

    def orbits(self) -> list[tuple[int, ...]]:
        """Partition of {1..degree} into minimal invariant subsets,
        ordered by minimum point."""
        if self._orbits is not None:
            return list(self._orbits)
        seen: set[int] = set()
        out = []
        for x in range(1, self.degree + 1):
            if x in seen:
                continue
            orb = {x}
            stack = [x]
            while stack:
                y = stack.pop()
                for g in self.generators:
                    z = g(y)
                    if z not in orb:
                        orb.add(z)
                        stack.append(z)
            seen |= orb
            out.append(tuple(sorted(orb)))
        self._orbits = out
        return list(out)

    def orbits_within(self, points: Iterable[int]) -> list[tuple[int, ...]]:
        """Orbits restricted to an invariant subset of the points."""
        points = frozenset(points)
        out = [o for o in self.orbits() if o[0] in points]
        if frozenset(x for o in out for x in o) != points:
            raise ValueError("point set is not invariant under the group")
        return out

    def is_simple_action(self) -> bool:
        """True iff no non-identity element fixes any point."""
        return all(len(p.moved_points()) == self.degree
                   for p in self.elements if not p.is_identity())

    # -- subgroup enumeration ----------------------------------------------

    def all_subgroups(self, max_order: Optional[int] = None) -> list["PermGroup"]:
        """Every subgroup exactly once, canonically ordered by (order, elements).

        Seeds with the cyclic subgroups and closes under joins with cyclic
        subgroups until a fixpoint; exact and fast for the tiny groups in
        scope.  Raises if the group order exceeds ``max_order``
        (default 120).
        """
        bound = DEFAULT_MAX_GROUP_ORDER if max_order is None else max_order
        if self.order > bound:
            raise ValueError(
                f"group order {self.order} exceeds subgroup-enumeration bound {bound}")
        if self._subgroups is None:
            self._subgroups = tuple(self._compute_subgroups())
        return list(self._subgroups)

    def _compute_subgroups(self) -> list["PermGroup"]:
        table = self._mul_table()
        n = self.order
        cyclics: dict[frozenset, tuple[int, ...]] = {}
        for i in range(n):
            fs = _close_indices(table, (i,))
            cyclics.setdefault(fs, (i,))
        known = dict(cyclics)
        worklist = list(known.items())
        cyc_items = list(cyclics.items())
        while worklist:
            grown = []
            for fs_a, gens_a in worklist:
                for fs_c, gens_c in cyc_items:
                    if fs_c <= fs_a:
                        continue
                    join_gens = tuple(dict.fromkeys(gens_a + gens_c))
                    fs_j = _close_indices(table, join_gens)
                    if fs_j not in known:
                        known[fs_j] = join_gens
                        grown.append((fs_j, join_gens))
            worklist = grown
        subs = [self._subgroup_from_indices(sorted(fs), gens)
                for fs, gens in known.items()]
        subs.sort(key=_subgroup_sort_key)
        return subs

    def conjugacy_classes_of_subgroups(
            self, max_order: Optional[int] = None) -> list["SubgroupClass"]:
        """Partition of all subgroups into conjugacy classes.

        The representative of each class is its canonically least member.
        """
        if self._classes is not None:
            return list(self._classes)
        subs = self.all_subgroups(max_order)
        table = self._mul_table()
        inv = self._inv_vector()
        idx = self._elem_index()
        by_fs = {}
        for sub in subs:
            fs = frozenset(idx[p.images] for p in sub.elements)
            by_fs[fs] = sub
        assigned: set[frozenset] = set()
        classes = []
        for sub in subs:
            fs = frozenset(idx[p.images] for p in sub.elements)
            if fs in assigned:
                continue
            conj_fss = {
                frozenset(table[table[g][s]][inv[g]] for s in fs)
                for g in range(self.order)
            }
            members = sorted((by_fs[c] for c in conj_fss), key=_subgroup_sort_key)
            assigned |= conj_fss
            classes.append(SubgroupClass(members[0], tuple(members)))
        self._classes = tuple(classes)
        return classes

    def normalizer(self, sub: "PermGroup") -> "PermGroup":
        """Largest subgroup of self in which ``sub`` is normal."""
        self._require_subgroup(sub)
        table = self._mul_table()
        inv = self._inv_vector()
        idx = self._elem_index()
        fs = frozenset(idx[p.images] for p in sub.elements)
        keep = [g for g in range(self.order)
                if frozenset(table[table[g][s]][inv[g]] for s in fs) == fs]
        return self._subgroup_from_indices(keep, keep)

    def left_coset_representatives(self, sub: "PermGroup") -> list[Permutation]:
        """One representative per left coset of ``sub``, each the
        lexicographically least element of its coset."""
        self._require_subgroup(sub)
        table = self._mul_table()
        idx = self._elem_index()
        hs = [idx[p.images] for p in sub.elements]
        covered: set[int] = set()
        reps = []
        for i in range(self.order):
            if i in covered:
                continue
            reps.append(self.elements[i])
            covered.update(table[i][h] for h in hs)
        return reps

    def _require_subgroup(self, sub: "PermGroup") -> None:
        if not sub.is_subgroup_of(self):
            raise ValueError("not a subgroup of the ambient group")

    # -- derived actions ----------------------------------------------------

    def regular_action(self) -> "PermGroup":
        """The group acting on its own canonical element list by left
        translation: a permutation group on ``order`` points, isomorphic to
        self, acting simply with a single orbit."""
        table = self._mul_table()
        n = self.order
        perms = {p.images: Permutation(table[i][x] + 1 for x in range(n))
                 for i, p in enumerate(self.elements)}
        return PermGroup(n, [perms[g.images] for g in self.generators],
                         list(perms.values()))

    def left_cosets(self, sub: "PermGroup") -> list["Coset"]:
        """The left cosets of ``sub``, one per representative."""
        return [Coset(rep, sub) for rep in self.left_coset_representatives(sub)]


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups with its designated representative."""
    representative: PermGroup
    members: tuple[PermGroup, ...]

    @property
    def size(self) -> int:
        return len(self.members)


class Coset:
    """A left coset r*H of a subgroup; two cosets are equal exactly when
    r_1^{-1} * r_2 lies in the subgroup."""

    __slots__ = ("representative", "subgroup")

    def __init__(self, representative: Permutation, subgroup: PermGroup):
        self.representative = representative
        self.subgroup = subgroup

    def elements(self) -> list[Permutation]:
        return sorted(self.representative * h for h in self.subgroup.elements)

    def __contains__(self, perm: Permutation) -> bool:
        return (self.representative.inverse() * perm) in self.subgroup

    def __eq__(self, other) -> bool:
        return (isinstance(other, Coset) and self.subgroup == other.subgroup
                and (self.representative.inverse() * other.representative)
                in self.subgroup)

    def __hash__(self) -> int:
        return hash((self.subgroup, min(self.elements()).images))

    def __repr__(self) -> str:
        return (f"Coset({self.representative.cycle_string()} * subgroup of "
                f"order {self.subgroup.order})")


def _subgroup_sort_key(sub: PermGroup):
    return (sub.order, tuple(p.images for p in sub.elements))


def _close_indices(table: list[list[int]], gens: tuple[int, ...]) -> frozenset[int]:
    """Closure of the identity and ``gens`` under the index multiplication table."""
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for a in frontier:
            row = table[a]
            for g in gens:
                b = row[g]
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(seen)


def close_generators(gens: Sequence[Permutation], degree: int) -> PermGroup:
    """Smallest permutation group on {1..degree} containing ``gens``."""
    for g in gens:
        if g.degree != degree:
            raise ValueError("degree mismatch among generators")
    ident = Permutation.identity(degree)
    seen = {ident.images: ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b.images not in seen:
                    seen[b.images] = b
                    nxt.append(b)
        frontier = nxt
    return PermGroup(degree, gens, list(seen.values()))


def replicated_action(group: PermGroup, copies: int) -> PermGroup:
    """The same abstract group acting on ``copies`` disjoint copies of its
    point set (degree grows to copies * degree); simple iff the original is."""
    if copies < 1:
        raise ValueError("copies must be >= 1")
    n = group.degree

    def widen(p: Permutation) -> Permutation:
        return Permutation(c * n + p(i)
                           for c in range(copies) for i in range(1, n + 1))

    return PermGroup(n * copies, [widen(g) for g in group.generators],
                     [widen(p) for p in group.elements])


# -- builtin constructions --------------------------------------------------

_ICOSAHEDRAL: Optional[PermGroup] = None


def trivial_group(degree: int) -> PermGroup:
    return close_generators([], degree)


def cyclic_group(k: int) -> PermGroup:
    if k < 1:
        raise ValueError("cyclic group size must be >= 1")
    if k == 1:
        return trivial_group(1)
    rho = Permutation(list(range(2, k + 1)) + [1])
    return close_generators([rho], k)


def klein_group() -> PermGroup:
    return close_generators(
        [parse_permutation("(1 2)(3 4)", 4), parse_permutation("(1 3)(2 4)", 4)], 4)


def icosahedral_group() -> PermGroup:
    """The order-60 rotation group of the icosahedron, acting simply on 60
    points via the regular action of the even permutations of five symbols."""
    global _ICOSAHEDRAL
    if _ICOSAHEDRAL is None:
        a5 = close_generators(
            [parse_permutation("(1 2 3 4 5)", 5), parse_permutation("(1 2 3)", 5)], 5)
        _ICOSAHEDRAL = a5.regular_action()
    return _ICOSAHEDRAL


def builtin_group(name: str) -> PermGroup:
    """Resolve a builtin group name: klein4, icosahedral, cyclic:k, trivial:n."""
    if name == "klein4":
        return klein_group()
    if name == "icosahedral":
        return icosahedral_group()
    if name.startswith("cyclic:"):
        return cyclic_group(_parse_size(name))
    if name.startswith("trivial:"):
        return trivial_group(_parse_size(name))
    raise ValueError(f"unknown builtin group name: {name!r}")


def _parse_size(name: str) -> int:
    try:
        k = int(name.split(":", 1)[1])
    except ValueError:
        raise ValueError(f"malformed builtin group name: {name!r}") from None
    if k < 1:
        raise ValueError(f"group size in {name!r} must be >= 1")
    return k


def group_from_text(text: str) -> PermGroup:
    """Parse the group text format: first line ``degree N``, then one
    generator per line in cycle notation.  Blank lines and ``#`` comments
    are ignored."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("degree"):
        raise ValueError("group text must start with a 'degree N' line")
    try:
        degree = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ValueError("group text must start with a 'degree N' line") from None
    gens = [parse_permutation(ln, degree) for ln in lines[1:]]
    return close_generators(gens, degree)


# -- isomorphism testing (used to share series between isomorphic groups) ----

def group_fingerprint(group: PermGroup) -> tuple:
    """Cheap isomorphism invariant: order, element-order multiset, and
    subgroup-order multiset.  Equal fingerprints still require
    :func:`find_isomorphism` to confirm."""
    orders = tuple(sorted(p.order() for p in group.elements))
    sub_orders = tuple(sorted(s.order for s in group.all_subgroups()))
    return (group.order, orders, sub_orders)


def find_isomorphism(g: PermGroup, h: PermGroup) -> Optional[dict]:
    """A group isomorphism g -> h as a dict on elements, or None."""
    if g.order != h.order:
        return None
    g_orders = sorted(p.order() for p in g.elements)
    h_orders = sorted(p.order() for p in h.elements)
    if g_orders != h_orders:
        return None
    n = g.order
    if n == 1:
        return {g.identity: h.identity}
    tg, th = g._mul_table(), h._mul_table()

    gens: list[int] = []
    closed = frozenset({0})
    for i in range(n):
        if i not in closed:
            gens.append(i)
            closed = _close_indices(tg, tuple(gens))
            if len(closed) == n:
                break
    ord_g = [p.order() for p in g.elements]
    ord_h = [p.order() for p in h.elements]
    candidates = [[j for j in range(n) if ord_h[j] == ord_g[i]] for i in gens]

    def extend(images: list[int]) -> Optional[list[int]]:
        phi = {0: 0}
        frontier = [0]
        while frontier:
            nxt = []
            for a in frontier:
                for gi, im in zip(gens, images):
                    b = tg[a][gi]
                    fb = th[phi[a]][im]
                    if b in phi:
                        if phi[b] != fb:
                            return None
                    else:
                        phi[b] = fb
                        nxt.append(b)
            frontier = nxt
        if len(set(phi.values())) != n:
            return None
        for a in range(n):
            for gi, im in zip(gens, images):
                if phi[tg[a][gi]] != th[phi[a]][im]:
                    return None
        return [phi[i] for i in range(n)]

    def backtrack(k: int, images: list[int]) -> Optional[list[int]]:
        if k == len(gens):
            return extend(images)
        for cand in candidates[k]:
            result = backtrack(k + 1, images + [cand])
            if result is not None:
                return result
        return None

    mapping = backtrack(0, [])
    if mapping is None:
        return None
    return {g.elements[i]: h.elements[mapping[i]] for i in range(n)}


def is_isomorphic(g: PermGroup, h: PermGroup) -> bool:
    return find_isomorphism(g, h) is not None
