import json
from pathlib import Path

import pytest

hallbridge = pytest.importorskip("hallbridge")

ALGEBRAS = Path(__file__).resolve().parents[2] / "algebras"

A2 = "q = 2\nvertices = 2\narrow a 1 2\n"
A3RAD2 = "q = 2\nvertices = 3\narrow a 1 2\narrow b 2 3\nrelation a b\n"


def test_session_basics():
    s = hallbridge.loads(A2)
    assert s.q == 2
    assert s.vertices == 2
    assert s.dimension == 3
    assert s.hom("S2", "P1") == 1
    assert s.hom("P1", "S2") == 0
    assert s.ext("S1", "S2") == [0, 1]


def test_load_from_file():
    s = hallbridge.load(ALGEBRAS / "a3rad2.alg")
    assert s.vertices == 3
    r = json.loads(s.resolve("S1"))
    assert r["length"] == 2
    assert r["terms"] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]


def test_hall_product_matches_known_example():
    s = hallbridge.loads(A2)
    terms = json.loads(s.hall("S1", "S2"))
    # [S1][S2] = v^-1 [S1+S2] + v^-1 (q-1) [P1]; at q=2 both coefficients
    # are (1/2) sqrt(2)
    assert len(terms) == 2
    for t in terms:
        assert t["dim_vector"] == [1, 1]
        assert t["coeff"] == {"a": "0/1", "b": "1/2"}


def test_bridgeland_and_reports():
    s = hallbridge.loads(A2)
    e = json.loads(s.e("S1"))
    assert len(e) == 1
    assert e[0]["key"]["alpha"] == [0, -1]
    assert e[0]["key"]["beta"] == [0, 0]

    assert s.psi_phi_identity("S1")
    t = json.loads(s.thm37("S1", "S2"))
    assert t["equal"]

    sr = json.loads(s.serre(1, 2))
    assert sr["hall_zero"]
    assert sr["bridgeland_zero"]


def test_verify_all_passes_small_bound():
    s = hallbridge.loads(A2, bound=[1, 1])
    checks = s.verify_all()
    assert checks
    assert all(ok for _, ok, _ in checks)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        hallbridge.loads("q = 4\nvertices = 1\n")
    s = hallbridge.loads(A2, bound=[1, 1])
    with pytest.raises(ValueError):
        s.hall("S1", "S1")
