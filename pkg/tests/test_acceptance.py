"""Acceptance checks, one test group per criterion.

A summary line ``criterion N: PASS/FAIL - title`` is printed at the end of
the run by the hooks in conftest.py.  Run directly with
``python3 tests/test_acceptance.py`` or through pytest.
"""

import random

import pytest
from _util import non_jordan_example, random_invertible

from jorvar import catalog, cohomology
from jorvar import deformation as D
from jorvar.algebra import change_of_basis, is_jordan, orbit_dimension

criterion = pytest.mark.criterion
TABLE_IDS = [f"J{i}" for i in range(1, 27)] + ["B1", "B2", "B3", "B4"]
BASIS_CHANGES = 100


@pytest.fixture(scope="module")
def graph():
    return D.build_closure_graph()


@criterion(1, "tables reproduction")
def test_tables_reproduction():
    mismatches = {cid: catalog.table_check(cid) for cid in TABLE_IDS}
    assert {k: v for k, v in mismatches.items() if v} == {}


@criterion(2, "Jordan validation")
def test_jordan_validation():
    assert all(is_jordan(catalog.algebra(cid)) for cid in catalog.ids())
    assert len(catalog.ids()) == 32
    v = is_jordan(non_jordan_example())
    assert not v and v.witness is not None and v.residual != 0


@criterion(3, "second cohomology values")
def test_cohomology():
    A = catalog.algebra
    assert cohomology.z2_dim(A("J7")) == 7
    assert cohomology.z2_dim(A("J20")) == 7
    assert [cohomology.z2_dim(A(c)) for c in ("J3", "J4", "J5")] == [8, 8, 8]
    for cid in catalog.OMEGA:
        assert cohomology.h2_dim(A(cid)) == 0, cid
        assert cohomology.rigidity_certificate(A(cid)) is cohomology.Rigidity.H2_ZERO
    s = cohomology.cocycle_system(A("J1"))
    assert cohomology.cocycle_rows_count(3) == 252
    assert s.shape == (252, 27)


@criterion(4, "deformation witnesses")
def test_deformation_witnesses():
    explicit = [("J21", "J24"), ("J15", "J23"), ("J3", "J8"), ("J4", "J11"), ("J5", "J19")]
    for s, t in explicit:
        w = D.explicit_witness(s, t)
        res = D.verify_arrow(w)
        assert res and res.limit == catalog.algebra(t), (s, t, res.reason)
    for cid in catalog.ids():
        res = D.verify_arrow(D.scaling_witness(cid))
        assert res, (cid, res.reason)


@criterion(5, "audit soundness")
def test_audit_soundness(graph):
    failing = [(e.source, e.target) for e in graph.edges if not D.necessary_conditions_audit(e.source, e.target).ok]
    assert failing == []
    assert "(i)" in D.necessary_conditions_audit("J8", "J7").failed()
    assert "(vii)" in D.necessary_conditions_audit("J3", "J7").failed()


@criterion(6, "pairwise distinctness")
def test_distinctness():
    rep = catalog.pairwise_distinct_audit()
    assert rep.ok and rep.distinct == 26

    def differing(x, y):
        fx = catalog.fingerprint(catalog.algebra(x)).fields()
        fy = catalog.fingerprint(catalog.algebra(y)).fields()
        return [k for k in fx if fx[k] != fy[k]]

    for x, y in (("J3", "J4"), ("J3", "J5"), ("J4", "J5")):
        assert differing(x, y) == ["trace_form_signature"]
    assert differing("J24", "J26") == ["square_form_invariant"]


@criterion(7, "rigid coverage")
def test_coverage(graph):
    rep = D.rigid_coverage_check(graph)
    assert set(rep.paths) == set(graph.nodes) - set(catalog.OMEGA)
    for node, path in rep.paths.items():
        assert path[0] in catalog.OMEGA and path[-1] == node
    assert rep.rigidity_consistent
    dims = [orbit_dimension(catalog.algebra(c)) for c in catalog.jordan3_ids()]
    assert orbit_dimension(catalog.algebra("J1")) == 9 == max(dims)
    assert len(graph.nodes) == 26
    assert sorted(graph.maximal_nodes()) == sorted(catalog.OMEGA) and len(catalog.OMEGA) == 8


@criterion(8, "two-dimensional cross-check")
def test_dim2():
    g = D.build_dim2_graph()
    assert len(g.nodes) == 7
    assert set(g.maximal_nodes()) == {"Re+Re", "B2", "B4"}
    assert D.rigid_coverage_check(g).rigidity_consistent


def _invariant_record(a):
    z2, b2 = cohomology.z2_dim(a), cohomology.b2_dim(a)
    return catalog.fingerprint(a).fields(), (z2, b2, z2 - b2)


@criterion(9, "property suites")
@pytest.mark.parametrize("cid", catalog.ids())
def test_basis_change_invariance(cid):
    rng = random.Random(f"accept-{cid}")
    a = catalog.algebra(cid)
    expected = _invariant_record(a)
    for _ in range(BASIS_CHANGES):
        b = change_of_basis(a, random_invertible(rng, a.dim))
        assert _invariant_record(b) == expected


@criterion(9, "property suites")
@pytest.mark.parametrize("cid", catalog.ids())
def test_coboundaries_are_cocycles(cid):
    a = catalog.algebra(cid)
    s = cohomology.cocycle_system(a)
    for gen in cohomology.coboundary_map(a).generators():
        assert not any(s.residual(cohomology.flatten(gen)))


@criterion(9, "property suites")
def test_limits_of_jordan_families_are_jordan(graph):
    witnesses = [e.witness for e in graph.edges if e.witness is not None]
    witnesses += [D.registered_witness(s, t) for s, t in D.JOR2_WITNESSES]
    assert len(witnesses) == 42 + len(D.JOR2_WITNESSES)
    for w in witnesses:
        assert D.verify_arrow(w)
        lim = D.limit_algebra(D.conjugate_family(D.resolve(w.source), w.g))
        assert is_jordan(lim), (w.source, w.target)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
