"""Smoke tests for the python bindings: one probe per operation family."""

import pytest

import superweight as sw


def test_version():
    assert sw.__version__ == "0.1.0"


def test_scalars():
    assert sw.scalar_add("1/3", "1/6") == "1/2"
    assert sw.scalar_mul(sw.zeta(4), sw.zeta(4)) == "-1"
    assert sw.scalar_inv("2") == "1/2"
    assert sw.cyclo_normalize(["0", "0", "1"], 4) == "-1"


def test_root_system():
    rs = sw.build_root_system("A", 1, 0)
    assert rs["family"] == "A(1,0)"
    assert len(rs["roots"]) == 6
    assert rs["even_type"] == "A1+k"
    assert sw.is_root("A", ["1", "0"], [1, 0, -1]) == "odd"
    assert sw.is_root("A", ["1", "0"], [1, 1, 1]) is None
    assert sw.form_value("A", ["1", "0"], [1, -1, 0], [1, -1, 0]) == "2"


def test_unsupported_family_raises():
    with pytest.raises(sw.DomainError):
        sw.build_root_system("A", 1, 1)


def test_grading():
    deg = sw.distinguished_grading("B", 0, 1)
    by_root = {tuple(e["root"]): e["degree"] for e in deg}
    assert by_root[(1,)] == 1
    assert by_root[(2,)] == 2


def test_combinatorics():
    assert sw.is_closed("B", ["0", "1"], [[1], [2]])
    assert not sw.is_closed("B", ["0", "1"], [[1]])
    assert sw.is_parabolic("B", ["0", "1"], [[1], [2]])
    assert sw.cone_member([[2, 0, 0], [0, 2, 0], [0, 0, 2]], [1, 1, 1])
    shadow = sw.shadow_from_inj("A", [1, 0], [[1, -1, 0], [-1, 1, 0]])
    assert len(shadow["f"]) == 4
    assert shadow["functional"] == [0, 0, 0]
    assert sw.classify_string("1/3,0", [[1, -1], [-1, 1]], [1, -1]) == "i"


def test_modules():
    assert sw.module_dim("sl2:F:3") == 4
    assert sw.module_dim("sl21:kac:2,1,5") == 8
    assert sw.module_dim("osp12:F:1") == 3
    t = sw.tensor("sl2:F:1", "sl2:F:1")
    dims = sorted(len(w["parities"]) for w in t["weights"])
    assert dims == [1, 1, 2]
    assert sw.endomorphisms("qwit:1") == (1, 1)
    assert sw.endomorphisms("sl2:F:3") == (1, 0)
    assert sw.simplicity("sl2:F:3") == "simple"
    assert sw.simplicity("sl2:dense:1/3:1:8") == "window_evidence"
    assert sw.irreducible_tensor_tag("qwit:1", "qwit:1") == ("half", 2)


def test_shadow_of_module():
    assert len(sw.shadow_of_module("sl2:F:3")["f"]) == 2
    assert len(sw.shadow_of_module("sl2:dense:1/3:1:8")["i"]) == 2


def test_induced_character():
    out = sw.induced_character("An", ["1"], [1, -1], "3,0:1", adim=1, depth=3)
    assert len(out) == 4
    assert all(e["multiplicity"] == 1 for e in out)


def test_evaluation():
    pts = ["1", "-1"]
    factors = ["sl2:dense:1/3:1:10", "sl2:F:2"]
    ann = sw.annihilator(pts, factors)
    assert ann["is_radical"]
    rep = sw.boundedness(pts, factors, [1, -1], 6)
    assert rep["predicted_bounded"]
    wit = sw.classification_witness(pts, factors)
    assert wit["accepted"]


def test_affine():
    assert sw.level_forced_zero("2", 5, "0")
    assert not sw.level_forced_zero("2", 5, "1")
    assert sw.chi_period(["1", "-1"], [["1", "1"]]) == 2
    assert sw.chi_period(["1", "z3", "z3^2"], [["1", "1", "1"]]) == 3
    dec = sw.loop_decompose(["1", "-1"], ["sl2:F:1", "sl2:F:1"], 6, ["1,0", "1,0"])
    assert dec["r"] == 2
    assert len(dec["components"]) == 2
    kc = sw.affine_kac_character("A", ["1", "0"], "2,1,5:1", 0)
    assert sum(e["multiplicity"] for e in kc) == 4
    inv = sw.g1_invariants(["1"], ["sl21:kac:2,1,5"], 1, 0)
    assert inv["dim_per_degree"] and all(d == 2 for _, d in inv["dim_per_degree"])
