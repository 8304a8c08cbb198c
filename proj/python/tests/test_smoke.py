"""Smoke tests for the pykmu module: one pass over each exposed surface."""

import json
import sys

import pykmu


def test_polynomials():
    ring = pykmu.GradedRing.weighted([1, 1, 1], "F101")
    f = pykmu.Polynomial("x0^2 - x1*x2", ring)
    g = pykmu.Polynomial("x0 + x1", ring)
    assert str(f * g) == str(pykmu.Polynomial("(x0^2 - x1*x2)*(x0 + x1)", ring))
    assert (f + (-f)).is_zero()
    assert f.weighted_degree() == 2
    assert str(f.derivative(0)) == "2*x0"

    form, empty = pykmu.random_form(ring, 2, 7)
    assert not empty
    form2, _ = pykmu.random_form(ring, 2, 7)
    assert form == form2


def test_groebner():
    ring = pykmu.GradedRing.weighted([1, 1, 1], "F101")
    ideal = pykmu.Ideal(ring, ["x0^2 - x1^2", "x0 - x1"])
    basis = ideal.groebner()
    assert len(basis) == 1
    assert ideal.contains_poly(pykmu.Polynomial("x0^3 - x1^3", ring))
    dim, deg = pykmu.Ideal(ring, ["x0", "x1"]).dimension_degree()
    assert (dim, deg) == (0, 1)


def test_invariants():
    inv = pykmu.ci_invariants([1, 1, 1, 1, 1, 3], [2, 6])
    assert inv == {"h3": 4, "c2h": 52, "chi": -256, "h0": 5}
    after = pykmu.transition_invariants(inv, 4)
    assert after["h3"] == 8 and after["c2h"] == 56 and after["h0"] == 6


def test_unprojection():
    amb = {"weights": [1, 1, 1, 1, 1, 2], "constraints": []}
    x = json.dumps({"name": "X34", "ambient": amb, "ci": [3, 4]})
    d = json.dumps({"name": "D222", "ambient": amb, "ci": [2, 2, 2]})
    res = pykmu.unproject_pair(x, d, 6, "codim3")
    assert res["mechanism"] == "codim3"
    assert len(res["generators"]) == 5
    assert res["matrix_profile_doubled"] == [0, 2, 2, 2, 2]
    assert res["y_spec"]["ambient"]["weights"] == [1, 1, 1, 1, 1, 2, 1]


def test_betti():
    printed = [[1, 0, 0, 0, 0], [0, 2, 0, 0, 0], [0, 8, 18, 8, 0], [0, 0, 0, 2, 0], [0, 0, 0, 0, 1]]
    t = pykmu.delpezzo6_betti()
    final = pykmu.link_betti(pykmu.link_betti(t, [2, 2, 3, 2], 4), [2, 2, 3, 3], 4)
    assert final.layout() == printed
    assert final.gorenstein_symmetric()


def test_node_count():
    assert pykmu.node_count_bezout([1, 1, 4, 4], [1, 1, 1, 1, 1]) == 16


def test_catalog():
    report = pykmu.load_catalog_report()
    assert report["all_rows_pass"]
    assert len(report["duplicate_flags"]) == 2
    dot = pykmu.web_dot()
    assert dot.startswith("digraph")


def test_checks_subset():
    results = pykmu.run_paper_checks(only="A5")
    assert len(results) == 1 and results[0]["status"] == "PASS"


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    sys.exit(main())
