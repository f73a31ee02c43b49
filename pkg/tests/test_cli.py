import io
import json
import subprocess
import sys

import pytest
from _util import non_jordan_example

from jorvar import catalog, cohomology, deformation
from jorvar.cli import FAILED, INTERNAL, OK, PARSE, run
from jorvar.formats import dump_jalg, dump_witness


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def records(*argv):
    code, out, _ = call("--format", "json-lines", *argv)
    return code, [json.loads(line) for line in out.splitlines()]


def test_show():
    code, out, _ = call("show", "J26")
    assert code == OK
    assert out.startswith("J26  dim 3")


def test_invariants_matches_table():
    code, out, _ = call("invariants", "J20")
    assert code == OK and "mismatch" not in out
    code, recs = records("invariants", "J22")
    assert recs[0]["dim_der"] == 9 and recs[0]["niltype_of_radical"] == [3]
    assert recs[0]["orbit_dim"] == 0 and recs[0]["mismatches"] == {}


def test_check_jordan(tmp_path):
    assert call("check-jordan", "J12")[0] == OK
    bad = tmp_path / "bad.jalg"
    bad.write_text(dump_jalg(non_jordan_example()))
    code, out, _ = call("check-jordan", str(bad))
    assert code == FAILED and "(1, 1, 1, 1, 1)" in out
    code, recs = records("check-jordan", str(bad))
    assert recs[0]["jordan"] is False and recs[0]["residual"] == "3"


def test_input_errors(tmp_path):
    broken = tmp_path / "broken.jalg"
    broken.write_text("dim 2\n1 1 1\n")
    code, _, err = call("check-jordan", str(broken))
    assert code == PARSE and "line 2" in err
    assert call("show", "J99")[0] == PARSE
    assert call("check-jordan", str(tmp_path / "missing.jalg"))[0] == PARSE
    assert call("frobnicate")[0] == PARSE
    assert call("audit", "J1")[0] == PARSE
    assert call("--help")[0] == OK


def test_fingerprint_comparison():
    code, out, _ = call("fingerprint", "J24", "J26")
    assert code == OK
    assert "J24 vs J26: differ in square_form_invariant" in out
    code, recs = records("fingerprint", "J3", "J4", "J5")
    pairs = [r for r in recs if "pair" in r]
    assert len(pairs) == 3 and all(r["differ"] == ["trace_form_signature"] for r in pairs)


def test_iso_verify(tmp_path):
    code, recs = records("iso-verify", "--nilpotent21", "1", "1", "0")
    assert code == OK and recs[0]["target"] == "J24" and recs[0]["certified"]
    code, recs = records("iso-verify", "--nilpotent21", "2", "3", "1")
    assert code == FAILED and recs[0]["target"] == "J24" and not recs[0]["certified"]
    assert call("iso-verify", "--nilpotent21", "0", "0", "0")[0] == PARSE

    swap = tmp_path / "swap.wit"
    swap.write_text("dim 3\n0 1 0\n1 0 0\n0 0 1\n")
    assert call("iso-verify", "J26", "J26", "--matrix", str(swap))[0] == OK
    assert call("iso-verify", "J24", "J26", "--matrix", str(swap))[0] == FAILED
    sing = tmp_path / "sing.wit"
    sing.write_text("dim 3\n1 1 0\n1 1 0\n0 0 1\n")
    assert call("iso-verify", "J24", "J26", "--matrix", str(sing))[0] == FAILED
    assert call("iso-verify", "J24", "J26")[0] == PARSE


def test_deform_verify(tmp_path):
    code, out, _ = call("deform-verify", "J3", "J8")
    assert code == OK and "[PaperExplicit]: verified" in out
    code, recs = records("deform-verify", "J6", "J21")
    assert code == OK and recs[0]["provenance"] == "Derived"
    assert call("deform-verify", "J20", "J22")[0] == OK
    assert call("deform-verify", "J22", "J1")[0] == FAILED

    w = tmp_path / "w.wit"
    w.write_text(dump_witness(deformation.explicit_witness("J3", "J8").g))
    assert call("deform-verify", "J3", "J8", "--witness", str(w))[0] == OK
    code, out, _ = call("deform-verify", "J3", "J11", "--witness", str(w))
    assert code == FAILED and "limit algebra:" in out
    sing = tmp_path / "sing.wit"
    sing.write_text("dim 3\nt t 0\n1 1 0\n0 0 1\n")
    assert call("deform-verify", "J3", "J8", "--witness", str(sing))[0] == FAILED


def test_audit():
    code, out, _ = call("audit", "J3", "J7")
    assert code == FAILED
    assert out.splitlines() == deformation.necessary_conditions_audit("J3", "J7").lines()
    code, recs = records("audit", "J2", "J9")
    assert code == OK and len(recs) == 7 and all(r["passed"] for r in recs)


def test_graph(tmp_path):
    dot = tmp_path / "g.dot"
    code, out, _ = call("graph", "--dot", str(dot))
    assert code == OK
    assert "nodes 26, edges 42" in out
    assert dot.read_text() == deformation.to_dot(deformation.build_closure_graph())
    code, recs = records("graph", "--dim2")
    assert code == OK
    summary = recs[-1]
    assert summary["nodes"] == 7 and set(summary["maximal"]) == {"Re+Re", "B2", "B4"}


def test_graph_internal_failure(monkeypatch):
    def broken(*a, **k):
        raise deformation.NotJordanAtLimit("forced")

    monkeypatch.setattr(deformation, "build_closure_graph", broken)
    assert call("graph")[0] == INTERNAL


def test_catalog_audit(tmp_path):
    code, out, _ = call("catalog-audit", "--export", str(tmp_path))
    assert code == OK
    lines = out.splitlines()
    assert len([ln for ln in lines if ln.startswith("J")]) == 26
    assert "distinct fingerprints among J1..J26: 26 of 26" in out
    assert (tmp_path / "manifest.txt").read_text() == catalog.manifest_text()
    code, recs = records("catalog-audit", "--all")
    assert code == OK and len(recs) == 33


@pytest.mark.parametrize("cid", ["J7", "J20", "B3"])
def test_cocycle_matches_module(cid):
    code, recs = records("cocycle", cid)
    a = catalog.algebra(cid)
    assert code == OK
    assert recs[0]["z2"] == cohomology.z2_dim(a)
    assert recs[0]["b2"] == cohomology.b2_dim(a)
    assert recs[0]["rows"] == cohomology.cocycle_rows_count(a.dim)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "jorvar", "check-jordan", "J1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and "J1: Jordan" in proc.stdout
