import pytest

import hfk


def test_parse():
    assert hfk.parse_braid("b=3; 1 -2 1 -2") == (3, [1, -2, 1, -2])
    with pytest.raises(ValueError):
        hfk.parse_braid("b=3; 1 1 1")


def test_alexander():
    assert hfk.alexander("b=3; 1 -2 1 -2") == {-1: -1, 0: 3, 1: -1}


def test_trefoil():
    r = hfk.compute("b=2; 1 1 1")
    assert r["total_dim"] == 3
    assert r["chain_dim"] == 13
    assert r["match"]
    assert sorted(r["records"]) == [(-2, 0, 1), (0, 1, 1), (2, 2, 1)]


def test_figure8_relations():
    assert hfk.relations("b=3; 1 -2 1 -2") == [
        "t^10*x3*x9 - x0*x6",
        "t^11*x9 - x0",
        "t^6*x1*x7 - x4*x10",
        "t^8*x1*x9 - x4*x6",
        "t^8*x3*x7 - x0*x10",
    ]
    assert hfk.relations("b=2; 1", resolution="1") == ["t - 1"]


def test_invariance():
    assert hfk.check_invariance("b=2; 1 1 1", "b=3; 1 1 1 -2")["equal"]
    assert not hfk.check_invariance("b=2; 1 1 1", "b=3; 1 -2 1 -2")["equal"]
