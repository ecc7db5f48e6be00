import random

import pytest

from ef1lib.core import (
    Allocation,
    MoveSet,
    PreconditionError,
    Transfer,
    is_ef1,
    normalize_instance,
    replay_moves,
)
from ef1lib.gadgets import catalog
from ef1lib.polypaths import (
    choose_base_algorithm,
    path_three_heavy_xt,
    path_xt_via_dummies,
)
from ef1lib.search import ef1_reach


def _goods(m: int) -> list[str]:
    return [f"g{k + 1}" for k in range(m)]


def test_choose_base_algorithm():
    assert choose_base_algorithm(normalize_instance(2, _goods(2), [[2, 1]] * 2)) == (
        "two-identical"
    )
    binary = normalize_instance(2, _goods(2), [[1, 0], [0, 1]])
    assert choose_base_algorithm(binary) == "two-binary"
    assert choose_base_algorithm(normalize_instance(3, _goods(2), [[1, 0]] * 3)) == (
        "iden-binary"
    )
    with pytest.raises(PreconditionError):
        choose_base_algorithm(normalize_instance(3, _goods(2), [[2, 1]] * 3))


def test_xt_handles_the_transfer_disconnection_fixture():
    inst, source, target, _ = catalog("transfer2-disconnected")
    path = path_xt_via_dummies(inst, source, target)
    states = replay_moves(inst, source, path, require_ef1=True)
    assert states[-1] == target


def test_xt_changes_bundle_sizes():
    inst = normalize_instance(2, _goods(3), [[1, 1, 1]] * 2)
    source = Allocation.of([[0, 1], [2]])
    target = Allocation.of([[2], [0, 1]])
    stats: dict[str, int] = {}
    path = path_xt_via_dummies(inst, source, target, stats=stats)
    assert any(isinstance(move, Transfer) for move in path)
    states = replay_moves(inst, source, path, require_ef1=True)
    assert states[-1] == target
    assert stats["steps"] >= len(path)


def test_xt_identical_binary_three_agents():
    inst = normalize_instance(3, _goods(5), [[1, 1, 0, 1, 0]] * 3)
    source = Allocation.of([[0, 2], [1], [3, 4]])
    target = Allocation.of([[1, 2, 4], [3], [0]])
    path = path_xt_via_dummies(inst, source, target, base="iden-binary")
    assert replay_moves(inst, source, path, require_ef1=True)[-1] == target


def _ef1_with_any_sizes(rng: random.Random, inst, attempts: int = 200):
    for _ in range(attempts):
        alloc = Allocation.from_owners(
            [rng.randrange(inst.n) for _ in range(inst.m)], inst.n
        )
        if is_ef1(inst, alloc):
            return alloc
    # Dealing goods out by decreasing value is EF1 for identical utilities.
    ranked = sorted(range(inst.m), key=lambda g: -inst.utilities[0][g])
    owners = [0] * inst.m
    for turn, g in enumerate(ranked):
        owners[g] = turn % inst.n
    return Allocation.from_owners(owners, inst.n)


@pytest.mark.parametrize("seed", range(100))
def test_xt_identical_binary_random_sizes(seed):
    rng = random.Random(7000 + seed)
    m = rng.randint(1, 6)
    row = [rng.randint(0, 1) for _ in range(m)]
    inst = normalize_instance(3, _goods(m), [row] * 3)
    source = _ef1_with_any_sizes(rng, inst)
    target = _ef1_with_any_sizes(rng, inst)
    for _ in range(20):
        if target.sizes != source.sizes:
            break
        target = _ef1_with_any_sizes(rng, inst)
    stats: dict[str, int] = {}
    path = path_xt_via_dummies(inst, source, target, base="iden-binary", stats=stats)
    assert replay_moves(inst, source, path, require_ef1=True)[-1] == target
    assert len(path) <= stats.get("steps", 0)
    if source.sizes != target.sizes:
        assert any(isinstance(move, Transfer) for move in path)


def test_xt_same_endpoints_and_unknown_base():
    inst = normalize_instance(2, _goods(2), [[1, 1]] * 2)
    alloc = Allocation.of([[0], [1]])
    assert path_xt_via_dummies(inst, alloc, alloc) == []
    with pytest.raises(PreconditionError):
        path_xt_via_dummies(inst, alloc, alloc, base="nope")


def test_three_heavy_worked_example():
    inst, source, target, _ = catalog("xt-three-heavy")
    assert ef1_reach(inst, source, target).status == "not_found"
    assert ef1_reach(inst, source, target, MoveSet.EXCHANGE_AND_TRANSFER).is_found
    path = path_three_heavy_xt(inst, source, target)
    assert len(path) == 4
    first = path[0]
    assert isinstance(first, Transfer)
    assert inst.goods[first.g] == "a1"
    assert first.j == 2
    assert replay_moves(inst, source, path, require_ef1=True)[-1] == target


def _three_heavy_shape(rng: random.Random):
    k = rng.randint(1, 4)
    tail_a = [rng.randint(1, 8) for _ in range(k)]
    tail_b = [rng.randint(1, 8) for _ in range(k)]
    floor = max(sum(tail_a), sum(tail_b))
    heavy = [floor + rng.randint(0, 3) for _ in range(3)]
    row = [heavy[0], *tail_a, heavy[1], *tail_b, heavy[2]]
    goods = (
        ["a0"]
        + [f"a{t + 1}" for t in range(k)]
        + ["b0"]
        + [f"b{t + 1}" for t in range(k)]
        + ["c0"]
    )
    inst = normalize_instance(3, goods, [row] * 3)
    a = list(range(k + 1))
    b = list(range(k + 1, 2 * k + 2))
    c = [2 * k + 2]
    source = Allocation.of([a, b, c])
    target = Allocation.of([[a[0], *b[1:]], [b[0], *a[1:]], c])
    return k, inst, source, target


@pytest.mark.parametrize("seed", range(200))
def test_three_heavy_random_shapes(seed):
    k, inst, source, target = _three_heavy_shape(random.Random(seed))
    stats: dict[str, int] = {}
    path = path_three_heavy_xt(inst, source, target, stats=stats)
    assert len(path) == k + 2
    assert stats["steps"] == k + 2
    assert replay_moves(inst, source, path, require_ef1=True)[-1] == target


def test_three_heavy_rejects_other_shapes():
    inst = normalize_instance(3, _goods(4), [[1, 1, 1, 1]] * 3)
    source = Allocation.of([[0, 1], [2], [3]])
    target = Allocation.of([[2, 1], [0], [3]])
    with pytest.raises(PreconditionError):
        path_three_heavy_xt(inst, source, target)
    two = normalize_instance(2, _goods(2), [[1, 1]] * 2)
    alloc = Allocation.of([[0], [1]])
    with pytest.raises(PreconditionError):
        path_three_heavy_xt(two, alloc, alloc)
