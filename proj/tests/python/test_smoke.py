import pytest

import oak


def test_dimension_and_basis():
    assert oak.dim(2) == 15
    assert "z" in oak.basis(1)


def test_bracket():
    assert oak.bracket("X[+e1-e2]", "X[+e2-e1]", 2) == "h1 - h2"
    assert oak.bracket("X[+e1]", "X[-e1]", 1) == "z"


def test_normal_order_and_f():
    assert oak.normal_order("X[+e1] X[-e1]", 1) == "X[-e1] X[+e1] + z"
    assert oak.f_map("h1", 1) == "t1 d1 + 1/2"


def test_act_on_shale_weil():
    assert oak.act("S", "d1^2", "t1^-1", 1) == "2 t1^-3"


def test_reports():
    r = oak.verify_hom("f", 3)
    assert r["pairs_checked"] == 406 and r["violations"] == 0
    assert oak.verify_twist([1], 1)["status"] == "ok"
    assert oak.verify_verma_factorization(["1/3"], depth=8)["status"] == "ok"


def test_verma_multiplicity_and_classify():
    t = oak.verma_char(["0"], depth=30)
    mult = {tuple(e["offset"]): e["mult"] for e in t["entries"]}
    assert mult[(-4,)] == 3
    flags = oak.classify(t, 12)
    assert flags["F+"] == [1] and flags["I"] == []


def test_errors():
    with pytest.raises(oak.ParseError):
        oak.bracket("X[+e9]", "h1", 1)
    code, out, err = oak.run_cli("bracket", "--rank", "1", "h1", "q")
    assert code == 2 and "'q'" in err
    assert oak.run_cli("bracket", "--rank", "1", "X[+2e1]", "X[-2e1]")[1] == "4 h1\n"
