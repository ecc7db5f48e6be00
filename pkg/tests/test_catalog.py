import pytest

from ef1lib.core import PreconditionError, is_ef1
from ef1lib.data import get_catalog_path
from ef1lib.gadgets import (
    PAD_RULES,
    CheckOutcome,
    catalog,
    catalog_names,
    fixture,
    verify_fixture,
)

EXPECTED_NAMES = [
    "gen2-disconnected",
    "gen2-no-optimal",
    "idenbin3-no-optimal",
    "binary3-disconnected",
    "iden3-disconnected",
    "transfer2-disconnected",
    "xt-three-heavy",
]


def test_catalog_file_is_packaged():
    path = get_catalog_path()
    assert path is not None
    assert path.name == "catalog.json"


def test_catalog_names():
    assert catalog_names() == EXPECTED_NAMES


@pytest.mark.parametrize("name", EXPECTED_NAMES)
def test_fixture_expectations_hold(name):
    outcomes = verify_fixture(name)
    failed = [outcome.to_dict() for outcome in outcomes if not outcome.ok]
    assert failed == []
    assert len(outcomes) > 2


@pytest.mark.parametrize("name", EXPECTED_NAMES)
def test_fixture_endpoints_are_ef1(name):
    inst, source, target, expect = catalog(name)
    assert is_ef1(inst, source)
    assert is_ef1(inst, target)
    assert expect


def test_two_agent_fixture_data():
    entry = fixture("gen2-disconnected")
    assert entry.instance.utilities == (
        (3, 3, 2, 2, 2, 2, 0, 0),
        (3, 3, 1, 1, 1, 1, 0, 0),
    )
    assert entry.source.names(entry.instance) == [
        ["g1", "g2", "g7", "g8"],
        ["g3", "g4", "g5", "g6"],
    ]
    assert entry.expect["reach"] == {"exchange": "not_found"}
    assert entry.description


def test_identical_fixture_uses_shorthand():
    inst, _, _, _ = catalog("iden3-disconnected")
    assert inst.identical
    assert inst.utilities[0] == (4, 3, 1, 4, 2, 2, 4)


PADDED_NAMES = [
    "idenbin3-no-optimal",
    "binary3-disconnected",
    "iden3-disconnected",
    "transfer2-disconnected",
]


@pytest.mark.parametrize("agents", [4, 5])
@pytest.mark.parametrize("name", PADDED_NAMES)
def test_padded_fixture_expectations_hold(name, agents):
    outcomes = verify_fixture(name, agents=agents)
    failed = [outcome.to_dict() for outcome in outcomes if not outcome.ok]
    assert failed == []
    assert len(outcomes) > 2
    assert fixture(name, agents=agents).instance.n == agents


def test_padding_agents_and_goods():
    inst, source, target, expect = catalog("iden3-disconnected", agents=5)
    assert inst.identical
    assert inst.goods[7:] == ("g8", "g9")
    assert inst.utilities[4] == (4, 3, 1, 4, 2, 2, 4, 4, 4)
    assert source.names(inst)[3:] == [["g8"], ["g9"]]
    assert target.names(inst)[3:] == [["g8"], ["g9"]]
    assert expect["connected"]["sizes"] == [3, 3, 1, 1, 1]
    assert "both" not in expect["reach"]
    assert "both" in catalog("iden3-disconnected")[3]["reach"]

    inst, source, _, expect = catalog("binary3-disconnected", agents=4)
    assert inst.m == 4
    assert inst.utilities[3] == (0, 0, 0, 0)
    assert source.sizes == (2, 2, 0, 0)
    assert expect["connected"]["sizes"] == [2, 2, 0, 0]

    inst, source, target, expect = catalog("transfer2-disconnected", agents=4)
    assert inst.m == 8
    assert inst.identical and inst.binary
    assert source.sizes == target.sizes == (2, 2, 2, 2)
    assert "connected" not in expect

    inst, source, _, _ = catalog("idenbin3-no-optimal", agents=4)
    assert inst.utilities[3] == inst.utilities[0]
    assert source.sizes == (2, 2, 2, 0)


def test_padding_rejects_fixed_fixtures_and_fewer_agents():
    assert sorted(PAD_RULES) == [
        "shared-row",
        "shared-row-with-good",
        "unit-goods",
        "zero-row",
    ]
    assert fixture("gen2-disconnected", agents=2).instance.n == 2
    with pytest.raises(PreconditionError):
        fixture("gen2-disconnected", agents=3)
    with pytest.raises(PreconditionError):
        fixture("iden3-disconnected", agents=2)


def test_unknown_fixture():
    with pytest.raises(PreconditionError):
        catalog("nope")


def test_check_outcome_reports_mismatch():
    outcome = CheckOutcome("distance[exchange,bfs]", 3, 4)
    assert not outcome.ok
    assert outcome.to_dict() == {
        "check": "distance[exchange,bfs]",
        "expected": 3,
        "actual": 4,
        "ok": False,
    }
