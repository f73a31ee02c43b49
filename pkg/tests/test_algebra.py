import random
from fractions import Fraction
from itertools import product

import pytest
from _util import non_jordan_example, random_invertible, random_vector

from jorvar import catalog
from jorvar.algebra import (
    Algebra,
    AlgebraError,
    DimensionMismatch,
    EigenspaceGap,
    NotCommutative,
    NotIdempotent,
    NotJordan,
    annihilator,
    change_of_basis,
    derivation_basis,
    derivation_dim,
    direct_sum,
    find_unit,
    is_associative,
    is_ideal,
    is_jordan,
    jordan_defect,
    multiply,
    orbit_dimension,
    peirce_decompose,
    permute,
    power_filtration,
    radical,
    radical_niltype,
    refined_peirce,
    restrict,
    unitalize,
    verify_idempotent,
)
from jorvar.exactla import RatMatrix, SingularMatrix

H = Fraction(1, 2)
A = catalog.algebra
NON_JORDAN = non_jordan_example()


def test_multiply_examples():
    j12 = A("J12")
    assert multiply(j12, (1, 0, 0), (0, 1, 0)) == (0, H, 0)
    assert multiply(A("J22"), (1, 2, 3), (4, 5, 6)) == (0, 0, 0)
    assert multiply(A("J20"), (1, 2, 3), (0, 0, 0)) == (0, 0, 0)
    with pytest.raises(DimensionMismatch):
        multiply(j12, (1, 0), (1, 0, 0))


def test_construction_errors():
    with pytest.raises(AlgebraError):
        Algebra(0, ())
    with pytest.raises(NotCommutative):
        Algebra(2, [[[0, 0], [1, 0]], [[0, 0], [0, 0]]])


def test_jordan_verdicts():
    assert is_jordan(A("J20"))
    assert is_jordan(Algebra.zero(4))
    v = is_jordan(NON_JORDAN)
    assert not v
    assert v.witness == (1, 1, 1, 1, 1)
    assert v.residual == 3
    with pytest.raises(NotJordan):
        radical(NON_JORDAN)


def test_counterexample_fails_unlinearized_identity():
    e1 = (1, 0)
    assert jordan_defect(NON_JORDAN, e1, e1) == (-1, 0)


def brute_force_jordan(a: Algebra, rng: random.Random, trials: int = 30) -> bool:
    """Oracle: evaluate ((xx)y)x - (xx)(yx) at random rational points."""
    return all(
        not any(jordan_defect(a, random_vector(rng, a.dim), random_vector(rng, a.dim))) for _ in range(trials)
    )


def test_jordan_check_agrees_with_random_evaluation():
    rng = random.Random(3)
    for cid in catalog.ids():
        assert brute_force_jordan(A(cid), rng)
    assert not brute_force_jordan(NON_JORDAN, rng)
    # random commutative 2-dim algebras: structure-constant check vs evaluation
    for _ in range(40):
        c = {(i, j): tuple(rng.choice((0, 0, 1, -1)) for _ in range(2)) for i, j in ((0, 0), (0, 1), (1, 1))}
        a = Algebra.from_products(2, c)
        assert bool(is_jordan(a)) == brute_force_jordan(a, rng)


def test_associativity():
    assert is_associative(A("J13"))
    v = is_associative(A("J12"))
    assert not v and v.witness[:3] == (1, 1, 2)
    assert is_associative(Algebra.zero(3))


def test_find_unit():
    assert find_unit(A("J3")) == (1, 0, 0)
    assert find_unit(A("J22")) is None
    assert find_unit(A("J1")) == (1, 1, 1)


def test_change_of_basis_examples():
    j26 = A("J26")
    assert change_of_basis(j26, RatMatrix.identity(3)) == j26
    swap = RatMatrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert change_of_basis(j26, swap) == j26
    with pytest.raises(SingularMatrix):
        change_of_basis(j26, RatMatrix([[1, 1, 0], [1, 1, 0], [0, 0, 1]]))


def test_change_of_basis_is_an_action():
    rng = random.Random(11)
    a = A("J20")
    for _ in range(5):
        g, h = random_invertible(rng, 3), random_invertible(rng, 3)
        assert change_of_basis(change_of_basis(a, g), h) == change_of_basis(a, g @ h)
        assert change_of_basis(change_of_basis(a, g), g.inverse()) == a


def test_change_of_basis_matches_displayed_action():
    # the columns of g are the new basis, so x *' y = g^{-1}(gx . gy)
    rng = random.Random(5)
    a = A("J19")
    g = random_invertible(rng, 3)
    b = change_of_basis(a, g)
    ginv = g.inverse()
    for _ in range(5):
        x, y = random_vector(rng, 3), random_vector(rng, 3)
        assert b.mul(x, y) == ginv @ a.mul(g @ x, g @ y)


def test_direct_sum_examples():
    assert direct_sum(A("B4"), A("Re")) == A("J2")
    assert permute(direct_sum(A("B3"), A("Re")), (2, 0, 1)) == A("J21")
    z = direct_sum(Algebra.zero(1), Algebra.zero(2))
    assert z == A("J22")


def test_direct_sum_additivity():
    ids = ["Re", "Rn", "B1", "B2", "B3", "B4"]
    for x, y in product(ids, repeat=2):
        a, b = A(x), A(y)
        s = direct_sum(a, b)
        assert len(radical(s)) == len(radical(a)) + len(radical(b))
        assert len(annihilator(s)) == len(annihilator(a)) + len(annihilator(b))
        assert derivation_dim(s) >= derivation_dim(a) + derivation_dim(b)


def test_unitalize():
    u = unitalize(Algebra.zero(1))
    assert find_unit(u) == (0, 1)
    assert catalog.fingerprint(u) == catalog.fingerprint(A("B1"))
    # (Re)^# is isomorphic to Re + Re via e, 1 - e
    re_sharp = unitalize(A("Re"))
    g = RatMatrix.from_columns([(1, 0), (-1, 1)])
    assert change_of_basis(re_sharp, g) == catalog.jor2_algebras()["Re+Re"]
    j22s = unitalize(A("J22"))
    assert find_unit(j22s) is not None and len(radical(j22s)) == 3
    for cid in catalog.ids():
        a = A(cid)
        ua = unitalize(a)
        assert find_unit(ua) is not None
        assert restrict(ua, [ua.basis(i) for i in range(a.dim)]) == a


def test_power_filtration_examples():
    assert power_filtration(A("J23")).niltype == (1, 1, 1)
    assert power_filtration(A("J26")).niltype == (2, 1)
    assert power_filtration(A("J22")).niltype == (3,)
    assert power_filtration(A("J1")).niltype is None
    pf = power_filtration(A("J24"))
    assert pf.power_dims[:3] == (3, 1, 0)


def test_annihilator_examples():
    assert len(annihilator(A("J17"))) == 2
    assert len(annihilator(A("J22"))) == 3
    assert len(annihilator(A("J3"))) == 0


def test_radical_examples_and_validation():
    assert len(radical(A("J7"))) == 1
    assert len(radical(A("J19"))) == 2
    assert radical(A("J1")) == []
    for cid in catalog.ids():
        a = A(cid)
        rad = radical(a)
        assert is_ideal(a, rad)
        if rad:
            assert power_filtration(restrict(a, rad)).niltype is not None


def test_derivations():
    assert derivation_dim(A("J12")) == 6
    assert derivation_dim(A("J1")) == 0
    assert derivation_dim(A("J22")) == 9
    # every returned derivation satisfies the Leibniz rule
    rng = random.Random(2)
    for cid in ("J12", "J20", "J24", "B2"):
        a = A(cid)
        for D in derivation_basis(a):
            for _ in range(3):
                x, y = random_vector(rng, a.dim), random_vector(rng, a.dim)
                lhs = D @ a.mul(x, y)
                rhs = tuple(p + q for p, q in zip(a.mul(D @ x, y), a.mul(x, D @ y)))
                assert lhs == rhs


def test_orbit_dimension():
    assert orbit_dimension(A("J1")) == 9
    assert orbit_dimension(A("J22")) == 0
    assert orbit_dimension(A("J7")) == 7


def test_idempotents():
    assert verify_idempotent(A("J8"), (1, 0, 0))
    assert not verify_idempotent(A("J8"), (0, 0, 0))
    assert verify_idempotent(A("J5"), (H, H, 0))


def test_peirce_examples():
    p = peirce_decompose(A("J8"), (1, 0, 0))
    assert p.one == ((1, 0, 0),) and p.half == ((0, 0, 1),) and p.zero == ((0, 1, 0),)
    assert peirce_decompose(A("J12"), (1, 0, 0)).dims == (1, 2, 0)
    assert peirce_decompose(A("J13"), (1, 0, 0)).dims == (3, 0, 0)
    with pytest.raises(NotIdempotent):
        peirce_decompose(A("J12"), (0, 1, 0))


def test_peirce_containments_everywhere():
    for cid in catalog.ids():
        a = A(cid)
        for i in range(a.dim):
            e = a.basis(i)
            if verify_idempotent(a, e):
                p = peirce_decompose(a, e)
                assert sum(p.dims) == a.dim
                assert all(p.checks.values()), (cid, p.checks)
                for lam in (1, H, 0):
                    for v in p.component(lam):
                        assert a.mul(v, e) == tuple(lam * x for x in v)


def test_eigenspace_gap_on_non_jordan():
    # e1^2 = e1, e1 e2 = 2 e2 is commutative but not Jordan; eigenvalue 2 is outside {0, 1/2, 1}
    a = Algebra.from_products(2, {(0, 0): (1, 0), (0, 1): (0, 2)})
    assert not is_jordan(a)
    with pytest.raises((EigenspaceGap, NotJordan)):
        peirce_decompose(a, (1, 0))


def test_refined_peirce_two_idempotents():
    for cid in ("J6", "J7", "J8", "J9"):
        a = A(cid)
        rp = refined_peirce(a, [a.basis(0), a.basis(1)])
        assert all(rp.checks.values()), (cid, rp.checks)
        dims = sum(len(c) for c in rp.components.values())
        assert dims == rp.algebra.dim
