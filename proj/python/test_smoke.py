import json

import pyzsym


def test_census_small():
    doc = json.loads(pyzsym.census(max_n=3, family="all"))
    assert doc["version"] == "1"
    assert len(doc["cases"]) > 0
    assert all(c["passed"] for c in doc["cases"])


def test_census_markdown():
    md = pyzsym.census(max_n=2, family="A", format="markdown")
    assert md.startswith("| case |")
    assert "sl(2)" in md


def test_grading_verify_and_roundtrip():
    g = pyzsym.psi_grading("so", 2, 1)
    assert pyzsym.verify_grading(g)
    assert pyzsym.grading_roundtrip(g) == g


def test_equiv_witnesses():
    assert pyzsym.equiv_witnesses("so", 1)
    assert pyzsym.equiv_witnesses("so", 3)
    assert pyzsym.equiv_witnesses("sp", 2)


def test_connection():
    c = json.loads(pyzsym.connection(pyzsym.psi_grading("so", 2, 1)))
    assert c["dim_h"] == 1
    assert c["dim_m"] == 5
    assert c["symmetric"] is False
    assert any(
        v != "0/1+0/1i" for row in c["torsion"] for cell in row for v in cell
    )
    assert all(
        v == "0/1+0/1i" for row in c["second_torsion"] for cell in row for v in cell
    )


def test_jacobi():
    heis = json.dumps({"dim": 3, "brackets": [[0, 1, 2, "1/1+0/1i"]]})
    assert pyzsym.jacobi_check(heis)
    bad = json.dumps(
        {"dim": 3, "brackets": [[0, 1, 1, "2/1+0/1i"], [1, 2, 2, "1/1+0/1i"]]}
    )
    assert not pyzsym.jacobi_check(bad)
