import itertools
from collections import Counter

import pytest

from ef1lib.core import PlacementError, PreconditionError, TheoremViolationError
from ef1lib.gadgets import (
    Cnf3Formula,
    GadgetConfig,
    build_hp,
    check_gadget_graph,
    enumerate_tf_triangles,
    gen_threesat_dtp,
    hex_distance,
    partition_from_assignment,
    select_patches,
    threesat,
    validate_triangle_partition,
)
from ef1lib.gadgets.hp import make_patch, shift
from ef1lib.gadgets.threesat import copy_kinds

P = 100


@pytest.mark.parametrize("p", [3, 5])
def test_hp_counts_and_degrees(p):
    g = build_hp(p)
    assert g.graph.number_of_nodes() == p * p
    assert g.graph.number_of_edges() == 3 * p * p
    assert all(g.graph.in_degree(v) == 3 for v in g.graph.nodes)
    assert all(g.graph.out_degree(v) == 3 for v in g.graph.nodes)
    assert check_gadget_graph(g) == []


def test_hp_needs_p_at_least_three():
    with pytest.raises(PreconditionError):
        build_hp(2)


@pytest.mark.parametrize("p", [3, 5])
def test_each_edge_in_one_t_and_one_f_triangle(p):
    g = build_hp(p)
    t_list, f_list = enumerate_tf_triangles(g)
    assert len(t_list) == len(f_list) == p * p
    for family in (t_list, f_list):
        uses = Counter(
            (tri[k], tri[(k + 1) % 3]) for tri in family for k in range(3)
        )
        assert set(uses) == set(g.graph.edges())
        assert set(uses.values()) == {1}
        assert validate_triangle_partition(g.graph, family).ok


def test_enumerate_tf_triangles_unknown_copy():
    with pytest.raises(KeyError):
        enumerate_tf_triangles(build_hp(3), "Y1")


def test_validate_triangle_partition_defects():
    g = build_hp(3)
    t_list, _ = enumerate_tf_triangles(g)
    a, b, c = t_list[0]

    short = validate_triangle_partition(g.graph, [(a, b)])
    assert not short.ok
    assert "length 2" in short.defect

    reversed_part = validate_triangle_partition(g.graph, [(a, c, b)])
    assert "missing edge" in reversed_part.defect

    twice = validate_triangle_partition(g.graph, t_list + [t_list[0]])
    assert "covered twice" in twice.defect

    partial = validate_triangle_partition(g.graph, t_list[1:])
    assert "not covered" in partial.defect


def test_hex_distance():
    origin = (0, 0, 0)
    assert hex_distance(10, origin, origin) == 0
    assert hex_distance(10, origin, shift(10, origin, (0, 1, -1))) == 1
    assert hex_distance(10, origin, shift(10, origin, (0, 1, -1), 3)) == 3
    assert hex_distance(10, origin, (9, 0, 1)) == 1


def test_patch_edges_belong_to_hp():
    p = 20
    g = build_hp(p)
    for kind in ("T", "F"):
        patch = make_patch(p, (5, 5, 10), kind)
        assert len(set(patch.edges)) == 9
        assert len(set(patch.vertices)) == 6
        for u, v in patch.edges:
            assert g.graph.has_edge(("H", u), ("H", v))
        assert patch.label() == f"{kind}(5,5,10)"


def test_select_patches_keeps_separation():
    patches = select_patches(P, 3, 3)
    assert Counter(patch.kind for patch in patches) == {"T": 3, "F": 3}
    origin = (0, 0, 0)
    for patch in patches:
        assert all(hex_distance(P, origin, x) >= 10 for x in patch.vertices)
    for first, second in itertools.combinations(patches, 2):
        assert all(
            hex_distance(P, x, y) >= 10
            for x in first.vertices
            for y in second.vertices
        )


def test_select_patches_edge_cases():
    assert select_patches(P, 0, 0) == []
    with pytest.raises(PlacementError):
        select_patches(3, 1, 0)
    with pytest.raises(ValueError):
        select_patches(P, -1, 0)
    close = select_patches(30, 1, 1, config=GadgetConfig(separation=4))
    assert len(close) == 2


def test_gadget_config_default_p():
    config = GadgetConfig()
    assert config.default_p(0) == 100
    assert config.default_p(3) == 300


def test_cnf_formula_validation():
    with pytest.raises(ValueError):
        Cnf3Formula.from_dimacs(2, [[1, 2]])
    with pytest.raises(ValueError):
        Cnf3Formula.from_dimacs(2, [[1, 2, 0]])
    with pytest.raises(ValueError):
        Cnf3Formula.from_dimacs(2, [[1, 2, 3]])
    formula = Cnf3Formula.from_dimacs(3, [[1, -2, 3]])
    assert formula.clauses == (((0, False), (1, True), (2, False)),)
    assert formula.first_unsatisfied([False, True, False]) == 0
    assert formula.first_unsatisfied([False, False, False]) is None


def test_formula_without_clauses():
    g = gen_threesat_dtp(Cnf3Formula(q=2, clauses=()), p=5)
    assert g.copies == ("Y1", "Y2")
    assert g.joins == ()
    assert g.graph.number_of_nodes() == 50
    assert g.graph.number_of_edges() == 150
    result = partition_from_assignment(g, [True, False])
    assert result.ok
    assert len(result.triangles) == 50


def test_gadget_rejects_small_p():
    with pytest.raises(PreconditionError):
        gen_threesat_dtp(Cnf3Formula(q=1, clauses=()), p=2)


def test_gadget_build_rejects_structural_defects(monkeypatch):
    seen = []

    def report(g):
        seen.append(g.copies)
        return ["2-cycle between a and b"]

    monkeypatch.setattr(threesat, "check_gadget_graph", report)
    with pytest.raises(TheoremViolationError, match="2-cycle between a and b"):
        gen_threesat_dtp(Cnf3Formula(q=2, clauses=()), p=5)
    assert seen == [("Y1", "Y2")]


def test_partition_needs_formula_and_full_assignment():
    with pytest.raises(PreconditionError):
        partition_from_assignment(build_hp(3), [])
    g = gen_threesat_dtp(Cnf3Formula(q=2, clauses=()), p=5)
    with pytest.raises(PreconditionError):
        partition_from_assignment(g, [True])


@pytest.fixture(scope="module")
def mixed_gadget():
    return gen_threesat_dtp(Cnf3Formula.from_dimacs(3, [[1, -2, 3]]))


def test_gadget_shape(mixed_gadget):
    g = mixed_gadget
    assert g.p == P
    assert g.q == 3
    assert g.r == 1
    assert g.copies == ("Y1", "Y2", "Y3", "L1.1", "L1.2", "L1.3")
    assert [join.kind for join in g.joins] == ["FFF", "FF", "FT", "FF"]
    assert g.graph.number_of_nodes() == 6 * P * P - 30
    assert g.graph.number_of_edges() == 18 * P * P - 48
    assert check_gadget_graph(g) == []


def test_joins_share_host_vertices(mixed_gadget):
    g = mixed_gadget
    ff_join = g.joins[1]
    host, guest = ff_join.copies
    assert (host, guest) == ("L1.1", "Y1")
    guest_patch = ff_join.patches[1]
    host_patch = ff_join.patches[0]
    assert g.vertex(guest, guest_patch.center[0]) == (host, host_patch.center[0])
    assert len(g.patch_vertices()) == 24


@pytest.mark.parametrize(
    "assignment", list(itertools.product([False, True], repeat=3))
)
def test_assignment_partition(mixed_gadget, assignment):
    g = mixed_gadget
    result = partition_from_assignment(g, assignment)
    satisfied = assignment[0] or not assignment[1] or assignment[2]
    assert result.ok == satisfied
    if not satisfied:
        assert result.failed_clause == 0
        assert result.triangles == ()
        return
    assert len(result.triangles) == g.graph.number_of_edges() // 3
    assert validate_triangle_partition(g.graph, result.triangles).ok


def test_copy_kinds_follow_assignment():
    formula = Cnf3Formula.from_dimacs(3, [[1, -2, 3]])
    kinds = copy_kinds(formula, [False, False, True])
    assert kinds == {
        "Y1": "F",
        "Y2": "F",
        "Y3": "T",
        "L1.1": "T",
        "L1.2": "F",
        "L1.3": "T",
    }


def test_all_true_assignment_on_positive_clause():
    g = gen_threesat_dtp(Cnf3Formula.from_dimacs(3, [[1, 2, 3]]), p=P)
    assert g.graph.number_of_nodes() == 6 * P * P - 30
    assert g.graph.number_of_edges() == 18 * P * P - 48
    result = partition_from_assignment(g, [True, True, True])
    assert result.ok
    assert validate_triangle_partition(g.graph, result.triangles).ok


def test_unsatisfiable_formula_has_no_partition():
    formula = Cnf3Formula.from_dimacs(1, [[1, 1, 1], [-1, -1, -1]])
    g = gen_threesat_dtp(formula, p=P)
    assert g.r == 2
    for value in (False, True):
        result = partition_from_assignment(g, [value])
        assert not result.ok
    assert partition_from_assignment(g, [False]).failed_clause == 0
    assert partition_from_assignment(g, [True]).failed_clause == 1
