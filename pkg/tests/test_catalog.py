import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from _util import random_invertible

from jorvar import catalog
from jorvar.algebra import Algebra, change_of_basis, direct_sum, is_jordan, permute
from jorvar.exactla import RatMatrix, SingularMatrix

H = Fraction(1, 2)


def test_get_examples():
    j20 = catalog.get("J20").algebra
    e1, n1, n2 = (j20.basis(i) for i in range(3))
    assert j20.mul(e1, e1) == e1
    assert j20.mul(n1, n1) == n2
    assert j20.mul(e1, n2) == n2
    assert j20.mul(e1, n1) == (0, H, 0)
    b4 = catalog.get("B4").algebra
    assert b4.mul(b4.basis(1), b4.basis(1)) == (-1, 0)
    assert catalog.get("J22").algebra.is_zero_algebra()
    with pytest.raises(catalog.UnknownId):
        catalog.get("J27")


def test_catalog_size():
    assert len(catalog.ids()) == 32
    assert len(catalog.ids(3)) == 26
    assert len(catalog.ids(2)) == 4
    assert len(catalog.ids(1)) == 2


@pytest.mark.parametrize("cid", catalog.ids())
def test_tables_reproduced(cid):
    assert catalog.table_check(cid) == {}
    assert is_jordan(catalog.algebra(cid))


@pytest.mark.parametrize("cid", sorted(catalog.DIRECT_SUMS))
def test_direct_sum_entries(cid):
    parts, order = catalog.DIRECT_SUMS[cid]
    s = catalog.algebra(parts[0])
    for p in parts[1:]:
        s = direct_sum(s, catalog.algebra(p))
    assert permute(s, order) == catalog.algebra(cid)


def test_fingerprint_separations():
    fp = {c: catalog.fingerprint(catalog.algebra(c)) for c in ("J3", "J4", "J5", "J22", "J24", "J26")}
    assert fp["J24"].square_form_invariant == (2, 2)
    assert fp["J26"].square_form_invariant == (2, 0)
    differing = [k for k, v in fp["J24"].fields().items() if v != fp["J26"].fields()[k]]
    assert differing == ["square_form_invariant"]
    sigs = {c: tuple(fp[c].trace_form_signature) for c in ("J3", "J4", "J5")}
    assert sigs == {"J3": (2, 1, 0), "J4": (1, 2, 0), "J5": (3, 0, 0)}
    j22 = fp["J22"]
    assert (j22.dim, j22.dim_rad, j22.dim_ann, j22.dim_der, j22.niltype_of_radical) == (3, 3, 3, 9, (3,))
    assert j22.associative and not j22.unital


def test_pairwise_distinct_full():
    rep = catalog.pairwise_distinct_audit()
    assert rep.ok and rep.distinct == 26 and len(rep.labels) == 26


def test_pairwise_distinct_detects_duplicate():
    rng = random.Random(4)
    members = {c: catalog.algebra(c) for c in catalog.jordan3_ids()}
    members["J26'"] = change_of_basis(members["J26"], random_invertible(rng, 3))
    rep = catalog.pairwise_distinct_audit(members)
    assert rep.collisions == (("J26", "J26'"),)


def test_pairwise_distinct_subset():
    rep = catalog.pairwise_distinct_audit({c: catalog.algebra(c) for c in ("J3", "J4", "J5")})
    assert rep.ok and rep.distinct == 3


def test_identify():
    rng = random.Random(8)
    for cid in ("J7", "J18", "J24", "J26"):
        b = change_of_basis(catalog.algebra(cid), random_invertible(rng, 3))
        assert catalog.identify(b) == [cid]


@pytest.mark.parametrize("cid", catalog.ids())
def test_fingerprint_invariant_under_basis_change(cid):
    rng = random.Random(cid)
    a = catalog.algebra(cid)
    fp = catalog.fingerprint(a).fields()
    for _ in range(5):
        b = change_of_basis(a, random_invertible(rng, a.dim))
        got = catalog.fingerprint(b).fields()
        for k in fp:
            assert got[k] == fp[k], (cid, k)


# the nilpotent family N1^2 = a N3, N2^2 = b N3, N1 N2 = g N3


def test_classifier_examples():
    c = catalog.classify_nilpotent_21(0, 0, 1)
    assert c.target_id == "J26" and catalog.verify_iso(c.witness)
    assert c.witness.matrix == RatMatrix.identity(3)
    c = catalog.classify_nilpotent_21(1, 1, 0)
    assert c.target_id == "J24" and catalog.verify_iso(c.witness)
    assert c.witness.matrix == RatMatrix.identity(3)
    c = catalog.classify_nilpotent_21(1, 0, 0)
    assert c.target_id == "J25" and catalog.verify_iso(c.witness)
    # normalizing map N1 -> n1, N2 -> n3, N3 -> n2 / alpha; the witness is its inverse
    assert c.witness.matrix.inverse() == RatMatrix.from_columns([(1, 0, 0), (0, 0, 1), (0, 1, 0)])
    c = catalog.classify_nilpotent_21(0, 1, 1)
    assert c.target_id == "J26" and c.delta == 1 and catalog.verify_iso(c.witness)


def test_classifier_errors():
    with pytest.raises(catalog.AllZero):
        catalog.classify_nilpotent_21(0, 0, 0)
    c = catalog.classify_nilpotent_21(2, 3, 1)
    assert c.target_id == "J24" and c.witness is None
    with pytest.raises(catalog.IrrationalSqrtDelta) as exc:
        catalog.classify_nilpotent_21(2, 3, 1, strict=True)
    assert exc.value.target_id == "J24"


def test_verify_iso_negative_and_singular():
    j24, j26 = catalog.algebra("J24"), catalog.algebra("J26")
    w = catalog.IsoWitness("J24", "J26", RatMatrix.identity(3), j24, j26)
    assert not catalog.verify_iso(w)
    bad = catalog.IsoWitness("J24", "J26", RatMatrix.zeros(3, 3), j24, j26)
    with pytest.raises(SingularMatrix):
        catalog.verify_iso(bad)


def test_verify_iso_random_basis_change():
    rng = random.Random(12)
    for cid in ("J13", "J20", "J26"):
        a = catalog.algebra(cid)
        g = random_invertible(rng, 3)
        b = change_of_basis(a, g)
        assert catalog.verify_iso(catalog.IsoWitness(cid, cid + "'", g, a, b))


rationals = st.fractions(min_value=-6, max_value=6, max_denominator=3)


def _sign_class(al, be, ga):
    if be == 0:
        return "J26" if ga != 0 else "J25"
    d = ga * ga - al * be
    return "J26" if d > 0 else "J24" if d < 0 else "J25"


@settings(max_examples=150, deadline=None)
@given(rationals, rationals, rationals)
def test_classifier_properties(al, be, ga):
    if al == be == ga == 0:
        return
    c = catalog.classify_nilpotent_21(al, be, ga)
    assert c.target_id == _sign_class(al, be, ga)
    if c.witness is not None:
        assert catalog.verify_iso(c.witness)
    # class agrees with fingerprints whatever the witness path
    fam = catalog.nilpotent_21_algebra(al, be, ga)
    assert c.target_id in catalog.identify(fam)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.sampled_from([1, -1]))
def test_negative_delta_with_rational_roots(p, q, s):
    # gamma = 0, alpha beta = (p q)^2 > 0 gives a rational sqrt(-delta)
    al, be = Fraction(s * p * p), Fraction(s * q * q)
    c = catalog.classify_nilpotent_21(al, be, 0)
    assert c.target_id == "J24"
    assert c.witness is not None and catalog.verify_iso(c.witness)


def test_jor2_nodes():
    nodes = catalog.jor2_algebras()
    assert list(nodes) == ["Re+Re", "Re+Rn", "Rn+Rn", "B1", "B2", "B3", "B4"]
    fps = [catalog.fingerprint(a) for a in nodes.values()]
    assert len(set(fps)) == 7


def test_export(tmp_path):
    from jorvar.formats import parse_jalg

    written = catalog.export_catalog(tmp_path)
    assert len(written) == 33
    for cid in catalog.ids():
        assert parse_jalg((tmp_path / f"{cid}.jalg").read_text()) == catalog.algebra(cid)
    manifest = (tmp_path / "manifest.txt").read_text().splitlines()
    assert manifest[1].startswith("Re 1 ")
    assert "J22 3 9 3 3 (3) 1 0" in manifest
    assert catalog.manifest_text() == (tmp_path / "manifest.txt").read_text()


def test_algebra_equality_ignores_labels():
    a = catalog.algebra("J1")
    assert Algebra(3, a.c, "other") == a
