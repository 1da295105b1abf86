"""Exact enumeration of symmetry classes of assembly pathways.

For a finite permutation group acting simply on a finite set, this package
builds and counts the rooted leaf-labeled trees (assembly trees) fixed by
subgroups, computes stabilizers of given trees, and derives the exact
distribution of pathway (orbit) sizes and probabilities, all in arbitrary-
precision rational arithmetic.
"""

from .fixed_trees import (BlockOrigin, BlockSystem, FixedTreeDiagnostics,
                          FixedTreeRecipe, children_block_system,
                          construction_recipes, count_fixed_trees_direct,
                          enumerate_block_systems, generate_fixed_trees,
                          generation_diagnostics, is_compatible)
from .lattice import HasseEdge, SubgroupLattice, build_lattice
from .pathways import (PathwayDistribution, SubgroupClassRow,
                       burnside_pathway_total, format_distribution,
                       icosahedral_report, pathway_probabilities,
                       pathway_size_distribution, tbar)
from .perms import (DEFAULT_MAX_GROUP_ORDER, Coset, PermGroup, Permutation,
                    SubgroupClass, builtin_group, close_generators,
                    cyclic_group, find_isomorphism, group_from_text,
                    icosahedral_group, is_isomorphic, klein_group,
                    parse_permutation, replicated_action, trivial_group)
from .series import (PowerSeries, base_tree_series, fixed_tree_count,
                     fixed_tree_series, scalar_mul, scale_argument,
                     series_add, series_exp, series_mul, series_sub,
                     subgroup_summands, tree_count,
                     verify_functional_equation, zero_series)
from .stabilizer import (StabilizerResult, TraversalAudit, fixes,
                         locate_image, pointer_traversal_audit, stabilizer)
from .trees import (AssemblyTree, TreePointerView, act, count_trees,
                    enumerate_all_trees, orbit_of_tree, parse_tree,
                    pointer_view, set_partitions)

__version__ = "0.1.0"
