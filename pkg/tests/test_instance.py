from fractions import Fraction

import pytest

from ef1lib.core import (
    Allocation,
    AllocationError,
    Instance,
    InstanceError,
    canonical_key,
    normalize_instance,
)


def test_normalize_clears_denominators_per_row():
    inst = normalize_instance(
        2, ["a", "b", "c"], [["1/2", "1/3", 0], [2, Fraction(3, 4), "5"]]
    )
    assert inst.utilities == ((3, 2, 0), (8, 3, 20))
    assert inst.m == 3
    assert not inst.identical
    assert not inst.binary


def test_flags_follow_matrix():
    inst = normalize_instance(3, ["a", "b"], [[1, 0]] * 3)
    assert inst.identical
    assert inst.binary
    assert inst.index_of("b") == 1
    assert inst.value(0, [0, 1]) == 1


@pytest.mark.parametrize(
    ("n", "goods", "rows"),
    [
        (1, ["a"], [[1]]),
        (2, ["a", "a"], [[1, 1], [1, 1]]),
        (2, [], [[], []]),
        (2, ["a"], [[-1], [1]]),
        (2, ["a"], [["-1/2"], [1]]),
        (2, ["a"], [[0.5], [1]]),
        (2, ["a"], [[True], [1]]),
        (2, ["a"], [[1]]),
        (2, ["a", "b"], [[1], [1, 2]]),
        (2, ["a"], [["x"], [1]]),
    ],
)
def test_normalize_rejects_bad_input(n, goods, rows):
    with pytest.raises(InstanceError):
        normalize_instance(n, goods, rows)


def test_instance_errors_are_value_errors():
    with pytest.raises(ValueError):
        normalize_instance(2, ["a"], [[1], [-2]])


def test_from_dict_identical_shorthand_round_trip():
    inst = Instance.from_dict(
        {
            "agents": 3,
            "goods": ["g1", "g2"],
            "utilities": [["1/2", 1]],
            "identical": True,
        }
    )
    assert inst.utilities == ((1, 2),) * 3
    assert Instance.from_dict(inst.to_dict()) == inst


def test_allocation_validation():
    with pytest.raises(AllocationError):
        Allocation.of([[0, 1], [1]])
    with pytest.raises(AllocationError):
        Allocation.of([[0], [2]])


def test_allocation_views():
    inst = normalize_instance(2, ["a", "b", "c"], [[1, 1, 1], [1, 1, 1]])
    alloc = Allocation.from_names(inst, [["c", "a"], ["b"]])
    assert alloc.sizes == (2, 1)
    assert alloc.owners == (0, 1, 0)
    assert alloc.owner_of(1) == 1
    assert alloc.names(inst) == [["a", "c"], ["b"]]
    assert alloc.to_dict(inst) == {"bundles": [["a", "c"], ["b"]]}
    assert canonical_key(alloc) == (1, 2, 1)
    assert Allocation.from_owners(alloc.owners, 2) == alloc


def test_allocation_shape_must_match_instance():
    inst = normalize_instance(3, ["a", "b"], [[1, 1]] * 3)
    with pytest.raises(AllocationError):
        Allocation.from_names(inst, [["a"], ["b"]])
    with pytest.raises(AllocationError):
        Allocation.from_owners([0, 3], 3)
