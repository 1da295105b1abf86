import random

import pytest

from capsid.lattice import build_lattice
from capsid.perms import trivial_group


@pytest.fixture(scope="module")
def klein_lattice(klein):
    return build_lattice(klein)


@pytest.fixture(scope="module")
def ico_lattice(ico):
    return build_lattice(ico)


def test_klein_mobius_values(klein_lattice):
    lat = klein_lattice
    trivial, top = lat.nodes[0], lat.nodes[-1]
    assert lat.mobius_value(trivial, trivial) == 1
    for sub in lat.nodes[1:4]:
        assert sub.order == 2
        assert lat.mobius_value(trivial, sub) == -1
        assert lat.mobius_value(sub, top) == -1
        assert lat.mobius_value(sub, sub) == 1
    assert lat.mobius_value(trivial, top) == 2
    assert lat.mobius_value(top, top) == 1


def test_interval_above(klein_lattice, ico_lattice):
    k1 = klein_lattice.nodes[1]
    assert [s.order for s in klein_lattice.interval_above(k1)] == [2, 4]
    top = klein_lattice.nodes[-1]
    assert klein_lattice.interval_above(top) == [top]
    h5 = next(n for n in ico_lattice.nodes if n.order == 5)
    assert [s.order for s in ico_lattice.interval_above(h5)] == [5, 10, 60]


def test_interval_above_rejects_foreign_subgroup(klein_lattice, s3):
    with pytest.raises(ValueError):
        klein_lattice.interval_above(s3)


def test_defining_recursion_rows(ico_lattice):
    # sum of mu over every interval [H, L] vanishes for H < L
    lat = ico_lattice
    n = len(lat.nodes)
    for i in range(n):
        for j in range(n):
            if i != j and lat.leq[i][j]:
                total = sum(lat.mobius[i][k] for k in range(n)
                            if lat.leq[i][k] and lat.leq[k][j])
                assert total == 0


def test_dual_recursion_columns(klein_lattice, ico_lattice):
    for lat in (klein_lattice, ico_lattice):
        n = len(lat.nodes)
        for i in range(n):
            for j in range(n):
                if i != j and lat.leq[i][j]:
                    total = sum(lat.mobius[k][j] for k in range(n)
                                if lat.leq[i][k] and lat.leq[k][j])
                    assert total == 0


def test_mobius_round_trip(ico_lattice):
    lat = ico_lattice
    rng = random.Random(11)
    t = {node: rng.randrange(-100, 100) for node in lat.nodes}
    tbar = {node: sum(lat.mobius_value(node, k) * t[k]
                      for k in lat.interval_above(node)) for node in lat.nodes}
    for node in lat.nodes:
        assert sum(tbar[k] for k in lat.interval_above(node)) == t[node]


def test_conjugates_share_mobius_to_top(ico_lattice):
    lat = ico_lattice
    top = lat.nodes[-1]
    for cls in lat.classes:
        values = {lat.mobius_value(m, top) for m in cls.members}
        assert len(values) == 1


def test_icosahedral_mobius_top_column(ico_lattice):
    # forced by small intervals: maximal classes get -1, and the recursion
    # gives the rest
    lat = ico_lattice
    top = lat.nodes[-1]
    by_order = {}
    for cls in lat.classes:
        by_order[cls.representative.order] = lat.mobius_value(
            cls.representative, top)
    assert by_order == {1: -60, 2: 4, 3: 2, 4: 0, 5: 0, 6: -1, 10: -1,
                        12: -1, 60: 1}


def test_hasse_edge_counts(ico_lattice):
    edges = {(e.order_below, e.order_above): e for e in ico_lattice.hasse_edge_counts()}
    assert edges[(3, 12)].below_per_above == 4
    assert edges[(2, 6)].below_per_above == 3
    assert edges[(2, 4)].below_per_above == 3
    assert edges[(5, 10)].below_per_above == 1
    assert edges[(2, 10)].below_per_above == 5
    assert edges[(1, 2)].above_per_below == 15
    assert set(edges) == {(1, 2), (1, 3), (1, 5), (2, 4), (2, 6), (2, 10),
                          (3, 6), (3, 12), (4, 12), (5, 10), (6, 60),
                          (10, 60), (12, 60)}


def test_trivial_lattice():
    lat = build_lattice(trivial_group(3))
    assert len(lat.nodes) == 1
    assert lat.hasse_edge_counts() == []
    assert lat.mobius_value(lat.nodes[0], lat.nodes[0]) == 1


def test_csv_export(klein_lattice):
    csv = klein_lattice.to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == "subgroup,H0(o1),H1(o2),H2(o2),H3(o2),H4(o4)"
    assert lines[1] == "H0(o1),1,-1,-1,-1,2"
    assert lines[2] == "H1(o2),,1,,,-1"
    assert lines[-1] == "H4(o4),,,,,1"
    assert csv == klein_lattice.to_csv()
