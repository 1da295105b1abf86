import itertools
import random

import pytest

from capsid.perms import Permutation, parse_permutation, trivial_group
from capsid.trees import (AssemblyTree, act, count_trees, enumerate_all_trees,
                          orbit_of_tree, parse_tree, pointer_view,
                          set_partitions)

from oracles import (brute_stabilizer, count_trees_by_partition_recursion,
                     random_permutation, random_tree)

TOTAL_COUNTS = {1: 1, 2: 1, 3: 4, 4: 26, 5: 236, 6: 2752, 7: 39208,
                8: 660032, 9: 12818912}


def test_parse_examples():
    tau = parse_tree("((1,2),3,4)")
    assert tau.labels == frozenset({1, 2, 3, 4})
    assert [sorted(c.labels) for c in tau.children] == [[1, 2], [3], [4]]
    assert parse_tree("(1,2)").to_text() == "(1,2)"
    assert parse_tree("9").is_leaf


@pytest.mark.parametrize("text", ["((1),2)", "(1)", "(1,1)", "", "()",
                                  "(1,2))", "((1,2)", "(1,2),3", "(0,1)",
                                  "(1,x)"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_tree(text)


def test_canonical_child_order():
    assert parse_tree("(4,3,(2,1))").to_text() == "((1,2),3,4)"
    assert parse_tree("((3,4),1,2)").to_text() == "(1,2,(3,4))"


def test_node_validation():
    with pytest.raises(ValueError):
        AssemblyTree.node([AssemblyTree.leaf(1)])
    with pytest.raises(ValueError):
        AssemblyTree.leaf(0)


def test_act_examples():
    tau = parse_tree("((1,2),3,4)")
    g = parse_permutation("(1 2)(3 4)", 4)
    assert act(g, tau) == tau
    assert act(Permutation.identity(4), tau) == tau
    h = parse_permutation("(1 4)(2 3)", 4)
    assert act(h, tau) == parse_tree("((3,4),1,2)")
    assert act(h, tau) != tau


def test_act_degree_check():
    with pytest.raises(ValueError):
        act(parse_permutation("(1 2)", 2), parse_tree("(1,2,3)"))


def test_act_is_group_action(klein, s3_regular):
    rng = random.Random(19)
    trees4 = list(enumerate_all_trees(range(1, 5)))
    trees6 = rng.sample(list(enumerate_all_trees(range(1, 7))), 40)
    for group, sample in ((klein, trees4), (s3_regular, trees6)):
        for tau in sample:
            for g in group.elements:
                for h in group.elements:
                    assert act(g * h, tau) == act(g, act(h, tau))


def test_act_vertex_label_definition():
    # g(tau) is the tree whose vertex labels are exactly the g-images
    rng = random.Random(23)
    for _ in range(30):
        tau = random_tree(rng, range(1, rng.randint(2, 9)))
        g = random_permutation(rng, max(tau.labels))
        image = act(g, tau)
        expected = {frozenset(g(x) for x in v) for v in tau.vertex_labels()}
        assert image.vertex_labels() == expected


def test_serialization_round_trip():
    rng = random.Random(29)
    for tau in enumerate_all_trees(range(1, 6)):
        assert parse_tree(tau.to_text()) == tau
    for _ in range(50):
        tau = random_tree(rng, rng.sample(range(1, 40), rng.randint(1, 10)))
        assert parse_tree(tau.to_text()) == tau


def test_canonical_equality():
    seen = {}
    for tau in enumerate_all_trees(range(1, 6)):
        text = tau.to_text()
        assert text not in seen
        seen[text] = tau
    # equality iff identical canonical text
    trees = list(seen.values())
    sample = random.Random(31).sample(trees, 20)
    for a in sample:
        for b in sample:
            assert (a == b) == (a.to_text() == b.to_text())


@pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 4), (4, 26),
                                     (5, 236), (6, 2752)])
def test_enumerate_counts(n, count):
    trees = list(enumerate_all_trees(range(1, n + 1)))
    assert len(trees) == count
    assert len(set(trees)) == count


def test_enumerate_count_seven():
    assert sum(1 for _ in enumerate_all_trees(range(1, 8))) == TOTAL_COUNTS[7]


def test_enumerate_arbitrary_labels():
    trees = list(enumerate_all_trees([7, 2, 9, 4]))
    assert len(trees) == 26
    assert all(t.labels == frozenset({2, 4, 7, 9}) for t in trees)


def test_enumerate_size_bound():
    with pytest.raises(ValueError):
        list(enumerate_all_trees(range(1, 11)))
    with pytest.raises(ValueError):
        list(enumerate_all_trees([]))


def test_count_trees_matches_series_and_recursion():
    for n in range(1, 10):
        assert count_trees(n) == TOTAL_COUNTS[n]
    for n in range(1, 11):
        assert count_trees(n) == count_trees_by_partition_recursion(n)


@pytest.mark.slow
def test_enumerator_matches_counts_at_oracle_scale():
    assert sum(1 for _ in enumerate_all_trees(range(1, 9))) == TOTAL_COUNTS[8]
    assert sum(1 for _ in enumerate_all_trees(range(1, 10))) == TOTAL_COUNTS[9]


@pytest.mark.slow
def test_enumerator_distinct_at_eight():
    trees = set(enumerate_all_trees(range(1, 9)))
    assert len(trees) == TOTAL_COUNTS[8]


def test_set_partitions():
    parts = list(set_partitions((1, 2, 3)))
    assert len(parts) == 5
    assert all(min(min(b) for b in p) == 1 for p in parts)
    assert list(set_partitions((1, 2, 3), min_parts=2)) == [
        ((1,), (2,), (3,)), ((1,), (2, 3)), ((1, 2), (3,)), ((1, 3), (2,))]


def test_orbit_of_tree(klein):
    tau = parse_tree("((1,2),(3,4))")
    orbit = orbit_of_tree(klein, tau)
    stab = brute_stabilizer(klein, tau)
    assert len(orbit) * len(stab) == klein.order
    assert orbit_of_tree(trivial_group(4), tau) == {tau}


def test_orbit_stabilizer_for_all_26(klein):
    for tau in enumerate_all_trees(range(1, 5)):
        orbit = orbit_of_tree(klein, tau)
        stab = brute_stabilizer(klein, tau)
        assert len(orbit) * len(stab) == 4


def test_klein_pathway_count(klein):
    seen = set()
    orbits = 0
    for tau in enumerate_all_trees(range(1, 5)):
        if tau not in seen:
            seen |= orbit_of_tree(klein, tau)
            orbits += 1
    assert orbits == 11


def test_burnside_consistency(klein):
    # average number of fixed trees equals the orbit count: (26 + 3*6)/4 = 11
    trees = list(enumerate_all_trees(range(1, 5)))
    fixed_counts = [sum(1 for t in trees if act(g, t) == t)
                    for g in klein.elements]
    assert sorted(fixed_counts) == [6, 6, 6, 26]
    assert sum(fixed_counts) // klein.order == 11


def test_pointer_view_structure():
    tau = parse_tree("((1,2),3,4)")
    g = parse_permutation("(1 2)(3 4)", 4)
    view = pointer_view(tau, g)
    vertices = list(view.vertices())
    assert sum(1 for v in vertices if v.is_leaf) == 4
    for v in vertices:
        for child in v.children:
            assert child.parent is v
    assert view.leaves[1].g_target is view.leaves[2]
    assert view.leaves[3].g_target is view.leaves[4]
    assert view.root.parent is None
    # labels are not stored except at the leaves
    assert view.root.leaf_label is None


def test_pointer_view_non_invariant_leaf_set():
    tau = parse_tree("(1,2,3)")
    g = parse_permutation("(3 4)", 4)
    view = pointer_view(tau, g)
    assert view.leaves[3].g_target is None
