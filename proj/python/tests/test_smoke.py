import pytest

import nonori


def test_layered_bundle_and_cover():
    sig = nonori.layered_bundle("[[1,1],[1,0]]")
    assert nonori.size(sig) == 6
    assert nonori.vertex_count(sig) == 1
    assert not nonori.is_orientable(sig)
    cover = nonori.double_cover(sig)
    assert nonori.is_orientable(cover)
    assert nonori.fingerprint(cover) == nonori.fingerprint(nonori.layered_bundle((2, 1, 1, 1)))


def test_recognize():
    assert nonori.recognize("[[2,1],[1,0]]") == "Sol c=7 bundle"
    assert nonori.recognize("[[1,1],[1,0]]").startswith("ambiguous{")


def test_spine_check():
    d = nonori.spine_check("[[2,1],[1,0]]")
    assert d["ok"]
    assert d["cover_spine_vertices"] <= 2 * d["n"] - 5


def test_enumerate_small():
    assert len(nonori.enumerate(1)) == 3
    assert nonori.face_pairing_graph_count(4) == 10
    sigs = nonori.enumerate(4, non_orientable=True, prune="all")
    assert sigs == sorted(sigs)
    assert all(not nonori.is_orientable(s) for s in sigs)


def test_seifert():
    assert nonori.chi_orb("RP2;(2,1)(3,1)") == "-1/6"
    assert nonori.euler_number("RP2;(2,1)(3,1)") is None
    assert nonori.seifert_double_cover("Dbar;(2,1)(3,1)") == "S2;(2,1)(3,1)(2,-1)(3,-1)"
    assert nonori.geometry("S2;(2,1)(3,1)(2,-1)(3,-1)") == "H2xR"
    assert nonori.small_h2r_manifolds() == ["RP2;(2,1)(3,1)", "Dbar;(2,1)(3,1)"]


def test_sol():
    assert nonori.sol_classify("[[1,1],[1,0]]") == ("Sol", False)
    assert nonori.sol_normalize("[[1,1],[1,0]]") == nonori.sol_normalize("[[0,1],[1,1]]")
    assert "[[1,1],[1,0]]" in nonori.sol_roots("[[2,1],[1,1]]")


def test_table1():
    counts, bullets = nonori.table1()
    assert counts == [0, 0, 0, 0, 0, 0, 5, 3]
    assert len(bullets) == 4


def test_errors():
    with pytest.raises(ValueError):
        nonori.sol_normalize("[[1,2],[3]]")
    with pytest.raises(nonori.DomainError):
        nonori.chi_orb("S2;(1,1)")
