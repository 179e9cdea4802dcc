import pytest

import fusionkit as fk


def test_tensor_example():
    assert fk.tensor("A2", [3, 2], [1, 0]) == {(4, 2): 1, (3, 1): 1, (2, 3): 1}


def test_dimension_and_weights():
    assert fk.dimension("A2", [3, 2]) == 42
    assert sum(fk.weights("A2", [3, 2]).values()) == 42
    assert fk.dimension("B2", [0, 1]) == 5


def test_fusion_truncates():
    assert (4, 2) not in fk.fusion("A2", 5, [3, 2], [1, 0])
    assert fk.fusion("A2", 6, [3, 2], [1, 0])[(4, 2)] == 1


def test_fusion_table_json():
    doc = fk.fusion_table("A1", 2)
    assert doc["algebra"] == "A1"
    assert doc["level"] == 2
    assert "[0]+[2]" in fk.render_table("A1", 2)


def test_orbit_counts():
    assert fk.orbit_count(3, 3, 0) == 4
    assert sum(fk.orbit_count(3, 3, r) for r in range(3)) == 10
    assert fk.orbit_count(5, 4, 2) == fk.orbit_count_bruteforce(5, 4, 2)
    assert fk.triple_orbits(3, [1, 1, 1], [1, 1, 1], [1, 1, 1]) == 3


def test_svg():
    text = fk.svg("A2", highest=[1, 1], level=2)
    assert text.startswith("<?xml")
    assert text == fk.svg("A2", highest=[1, 1], level=2)


def test_verify_tables():
    (result,) = fk.verify("tables")
    assert result["passed"]


def test_errors():
    with pytest.raises(fk.InvalidAlgebra):
        fk.tensor("E8", [1], [1])
    with pytest.raises(fk.LevelError):
        fk.fusion("A2", 1, [2, 0], [0, 0])
    with pytest.raises(ValueError):
        fk.weights("A2", [1, 2, 3])
