import pytest

import fillcert


def test_tables_in_two_dimensions():
    m1 = fillcert.build_matrix(1)
    assert m1["entries"] == [[1, 0, 1], [0, 1, 1], [0, 0, 1]]
    assert m1["rows"] == ["(1-x) P_y", "(1-y) P_x", "(1-x) P_x"]
    assert fillcert.build_matrix(0, dim=3)["entries"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_geometric_mode_matches():
    for k in range(3):
        assert fillcert.build_matrix(k, dim=3, mode="geometric") == fillcert.build_matrix(k, dim=3)


def test_injectivity_and_negative_control():
    assert fillcert.is_injective(fillcert.build_matrix(2))["injective"]
    nc = fillcert.negative_control()
    assert not nc["injective"]
    assert nc["witnessIsXMinusY"] and nc["geometricVanishes"]
    link = {"dim": 2, "components": [{"direction": [1, -1], "label": "l_0", "offsetSeed": 0}]}
    r = fillcert.is_injective(fillcert.build_matrix(1, link))
    assert not r["injective"] and r["witness"] == [0, 1, -1]


def test_certificates():
    c = fillcert.certify(5, 3)
    assert c["verdict"]
    assert len(c["link"]["components"]) == 7
    assert [d["j"] for d in c["degrees"]] == [0, 1, 2]
    assert fillcert.certify(2, 2)["link"]["components"] == []


def test_words():
    assert fillcert.lcs_depth("[[x,y],z]") == 3
    assert fillcert.lcs_depth("1") is None
    p = fillcert.phi("[x,y]", 2)
    assert p["coords"] == [0, 0, 1]
    assert [fillcert.witt_rank(3, k) for k in range(1, 6)] == [3, 3, 8, 18, 48]
    assert sum(1 for w, _ in fillcert.hall_basis(3, 4) if w == 4) == 18


def test_fingers_and_vandermonde():
    r = fillcert.finger_check(3, 2, seed=4)
    assert r["violations"] == [] and r["checked"] == 5
    assert fillcert.finger_check(3, 2, seed=4) == r
    v = fillcert.vandermonde_check(4)
    assert v["ok"] and v["determinant"] == "12"


def test_errors():
    with pytest.raises(ValueError):
        fillcert.lcs_depth("[x,", 2)
    with pytest.raises(ValueError):
        fillcert.certify(1, 2)
    assert fillcert.laurent("(1-x)^2", 2) == "1 - 2*x + x^2"
