"""Contraction of a packed partial permutation along a set partition."""

from cycstat.contraction import contract
from cycstat.partial import CyclePathType, PartialPermutation
from cycstat.setpartitions import SetPartition, set_partitions

# four disjoint paths on 13 vertices: lengths 4, 3, 1, 1 (in edges)
THIRTEEN = PartialPermutation(
    (1, 2, 3, 4, 6, 7, 8, 10, 12),
    (2, 3, 4, 5, 7, 8, 9, 11, 13),
)


def test_singletons_give_own_type():
    for p in [
        THIRTEEN,
        PartialPermutation((1, 2), (2, 1)),
        PartialPermutation((1, 2), (2, 3)),
    ]:
        m = len(p.support)
        assert contract(p, SetPartition.singletons(m)) == p.cycle_path_type()


def test_single_merge_glues_paths():
    # merging vertex 4 of the 4-path with vertex 7 of the 3-path propagates
    # 3~6 and 5~8, gluing the two long paths into one path of length 5
    rho = SetPartition.from_blocks(
        [{4, 7}] + [{x} for x in range(1, 14) if x not in (4, 7)], m=13
    )
    assert contract(THIRTEEN, rho) == CyclePathType((), (5, 1, 1))


def test_13_point_full_closure_collapses():
    # with the additional blocks {3,11}, {4,10} and {1,12}, {6,13} the
    # bidirectional closure chains every vertex into one class containing an
    # edge, so only constant maps onto fixed points remain; verified by
    # brute-force enumeration of block-constant edge-respecting functions
    rho = SetPartition.from_blocks(
        [{1, 12}, {2}, {3, 11}, {4, 7, 10}, {5}, {6, 13}, {8}, {9}], m=13
    )
    assert contract(THIRTEEN, rho) == CyclePathType((1,), ())


def test_path_endpoints_merge_to_cycle():
    # gluing the two ends of the path 1->2->3 forces psi(1)=psi(3): the
    # quotient is a 2-cycle
    p = PartialPermutation((1, 2), (2, 3))
    rho = SetPartition.from_blocks([{1, 3}, {2}])
    assert contract(p, rho) == CyclePathType((2,), ())


def test_two_cycle_collapses_to_fixed_point():
    p = PartialPermutation((1, 2), (2, 1))
    rho = SetPartition.from_blocks([{1, 2}])
    assert contract(p, rho) == CyclePathType((1,), ())


def test_transitive_propagation():
    # two 2-edge paths 1->2->3 and 4->5->6: merging 1~4 must also merge the
    # successors-of-successors 3~6, leaving a single 2-edge path
    p = PartialPermutation((1, 2, 4, 5), (2, 3, 5, 6))
    rho = SetPartition.from_blocks([{1, 4}, {2}, {3}, {5}, {6}])
    assert contract(p, rho) == CyclePathType((), (2,))


def test_backward_propagation():
    # merging the sinks 3~6 must merge predecessors 2~5 and then 1~4
    p = PartialPermutation((1, 2, 4, 5), (2, 3, 5, 6))
    rho = SetPartition.from_blocks([{3, 6}, {1}, {2}, {4}, {5}])
    assert contract(p, rho) == CyclePathType((), (2,))


def test_path_wraps_onto_cycle():
    # 2-cycle (1 2) plus path 3->4; gluing 3 onto 1 wraps the path around
    # the cycle: 4 lands on 2, quotient is just the 2-cycle
    p = PartialPermutation((1, 2, 3), (2, 1, 4))
    rho = SetPartition.from_blocks([{1, 3}, {2}, {4}])
    assert contract(p, rho) == CyclePathType((2,), ())


def test_quotient_type_always_valid():
    # every contraction yields a well-formed disjoint union of cycles and
    # paths (support accounting m' = |mu'| + |nu'| + len(nu') holds)
    p = PartialPermutation((1, 2, 3, 4), (2, 3, 1, 5))
    for rho in set_partitions(5):
        t = contract(p, rho)
        assert t.support_size == sum(t.cycles) + sum(t.paths) + len(t.paths)


def test_coarser_partitions_quotient_further():
    # contracting along a coarser partition never has more vertices
    p = PartialPermutation((1, 2, 4), (2, 3, 5))
    parts = list(set_partitions(5))
    for rho in parts:
        for tau in parts:
            joined = rho.join(tau)
            assert (
                contract(p, joined).support_size
                <= contract(p, rho).support_size
            )
