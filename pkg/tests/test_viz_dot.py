from ef1lib.core import Allocation, normalize_instance
from ef1lib.distance import build_item_graph, max_cycle_partition
from ef1lib.viz import item_graph_to_dot


def test_item_graph_dot_contains_agents_and_goods():
    inst = normalize_instance(2, ["g1", "g2", 'say "hi"'], [[1, 1, 1], [1, 1, 1]])
    source = Allocation.of([[0, 2], [1]])
    target = Allocation.of([[1, 2], [0]])

    dot = item_graph_to_dot(inst, source, target)

    assert dot.startswith("digraph ItemGraph {")
    assert '"1" [label="1"];' in dot
    assert '"1" -> "2" [label="g1", color="black"];' in dot
    assert '"1" -> "1" [label="say \\"hi\\"", color="grey"];' in dot


def test_item_graph_dot_colours_cycles():
    inst = normalize_instance(2, ["g1", "g2"], [[1, 1], [1, 1]])
    source = Allocation.of([[0], [1]])
    target = Allocation.of([[1], [0]])
    _, partition = max_cycle_partition(build_item_graph(source, target))

    dot = item_graph_to_dot(inst, source, target, partition)

    assert 'color="blue"' in dot
    assert 'color="black"' not in dot
