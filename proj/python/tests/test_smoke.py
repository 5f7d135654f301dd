import math
import os
from pathlib import Path

import numpy as np
import pytest

import treewalk as tw

FIXTURES = Path(os.environ.get("TREEWALK_FIXTURE_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def fixture(name):
    return tw.load_graph(FIXTURES / f"{name}.edges")


def test_graph_basics():
    g = fixture("gamma8")
    assert g.n == 8
    assert len(g.edges) == 9
    assert [v for v in range(1, 9) if g.degree(v) == 3] == [2, 3]
    assert g.is_connected()
    h = tw.Graph(3, [(2, 1), (2, 3)])
    assert h.edges == [(1, 2), (2, 3)]


def test_bad_input_raises():
    with pytest.raises(tw.TreewalkError):
        tw.Graph(3, [(1, 1)])
    with pytest.raises(tw.ParseError):
        tw.load_graph(FIXTURES / "missing.edges")


def test_derive_and_labels():
    d = tw.derive(fixture("gamma8"), "btl", 3)
    assert (d.vertex_count, d.edge_count) == (22, 68)
    assert d.kind == "btl" and d.level == 3
    v = d.resolve("{{{1,2},{2,3}},{{2,3},{2,4}}}")
    assert d.label(v) == "{{{1,2},{2,3}},{{2,3},{2,4}}}"
    assert d.tree(v)["vt"] == [1, 2, 3, 4]
    with pytest.raises(tw.UnknownVertex):
        d.resolve("{{{1,2},{2,3}},{{2,3},{2,9}}}")
    assert '"n_vertices":22' in d.to_json()


def test_caps_and_connectivity():
    with pytest.raises(tw.DerivationTooLarge):
        tw.derive(fixture("gamma8"), "btl", 6)
    with pytest.raises(tw.NotConnected):
        tw.derive(fixture("c3"), "tl", 3)
    s = tw.btl_class_structure(fixture("gamma8"), 6)
    assert s["vertex_count"] == 197568
    assert len(s["sizes"]) == 24


def test_partition_and_quotient():
    d = tw.derive(fixture("gamma8"), "btl", 3)
    p = tw.tree_partition(d)
    assert len(p["classes"]) == 18
    assert p["equitable"]
    b = tw.quotient_matrix(d)
    assert b.shape == (18, 18)
    with pytest.raises(tw.NotEquitable):
        tw.quotient_matrix(tw.derive(fixture("gamma8"), "tl", 3))


def test_char_poly_and_classifier():
    c8 = fixture("c8").adjacency()
    assert tw.char_poly(c8) == [1, 0, -8, 0, 20, 0, -16, 0, 0]
    assert tw.factored_char_poly(c8) == "x^2(x + 2)(x - 2)(x^2 - 2)^2"
    assert tw.multipartite_char_poly([1, 1]) == [1, 0, -1]
    roots, rest = tw.integer_roots([1, 0, -4])
    assert roots == [(-2, 1), (2, 1)] and rest == [1]
    assert tw.periodicity_classify(fixture("c4").adjacency())["status"] == "Periodic-Integer"
    p3 = tw.periodicity_classify(fixture("p3").adjacency())
    assert p3["status"] == "Periodic-SqrtClass" and p3["delta"] == 2
    assert tw.periodicity_classify(fixture("c5").adjacency())["status"] == "Aperiodic"
    eig = tw.eigenvalues(fixture("k4").adjacency())
    assert np.allclose(eig, [-1, -1, -1, 3])


def test_walk():
    k2 = fixture("k2").adjacency()
    h = np.asarray(tw.transition_operator(k2, math.pi / 2))
    assert abs(h[1, 0] - 1j) < 1e-12
    assert np.allclose(h.conj().T @ h, np.eye(2))
    assert tw.pst_scan(k2, 0, 1)["time"] == pytest.approx(math.pi / 2, abs=1e-7)
    assert tw.periodic_return_scan(fixture("c4").adjacency())["time"] == pytest.approx(math.pi, abs=1e-7)
    assert tw.periodic_return_scan(fixture("c8").adjacency())["time"] is None


def test_table1():
    d = tw.derive(fixture("gamma8"), "tl", 3)
    rows = tw.infinitesimal_table(d, "{{{1,2},{2,3}},{{2,3},{2,4}}}", 1e-3)
    neighbors = [r for r in rows if r["class"] == "neighbor"]
    assert len(neighbors) == 6
    assert all(0.9e-3 <= abs(r["amplitude"]) <= 1.1e-3 for r in neighbors)
    assert sum(abs(r["amplitude"]) ** 2 for r in rows) == pytest.approx(1.0, abs=1e-12)
