import ef1lib


def test_version():
    assert ef1lib.__version__ == "0.1.0"


def test_top_level_exports():
    inst = ef1lib.normalize_instance(2, ["g1", "g2"], [[1, 1], [1, 1]])
    alloc = ef1lib.Allocation.of([[0], [1]])
    assert ef1lib.is_ef1(inst, alloc)
    assert ef1lib.ef1_reach(inst, alloc, alloc).length == 0
