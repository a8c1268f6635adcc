import pytest
from hypothesis import given, settings, strategies as st

from tlcat.diagrams import (
    BoundaryMismatchError,
    elementary,
    enumerate_basis,
    identity,
)
from tlcat.morphisms import Morphism, lincomb
from tlcat.qring import Scalar, qratio, quantum_int


E1 = Morphism.of(elementary(2, 1))
ID2 = Morphism.identity(2)
P2 = ID2 - qratio(1, 2) * E1

coeffs = st.sampled_from([
    Scalar.one(), Scalar(2), Scalar(-1), Scalar.q_power(1), Scalar.q_power(-2),
    qratio(1, 2), qratio(2, 3), Scalar(quantum_int(2)), -qratio(3, 4),
])


def morphisms(n, k, max_terms=3):
    basis = enumerate_basis(n, k)
    return st.lists(
        st.tuples(st.sampled_from(basis), coeffs),
        min_size=0, max_size=max_terms).map(lambda ts: Morphism(n, k, ts))


# -- construction and linear structure -----------------------------------------

def test_zero_terms_pruned_and_merged():
    e = elementary(2, 1)
    m = Morphism(2, 2, [(e, Scalar.one()), (e, Scalar(-1))])
    assert m.is_zero and len(m) == 0
    m2 = Morphism(2, 2, [(e, Scalar.one()), (e, Scalar.one())])
    assert m2.coeff(e) == Scalar(2)


def test_boundary_validation():
    with pytest.raises(BoundaryMismatchError):
        Morphism(2, 2, [(identity(3), Scalar.one())])
    with pytest.raises(BoundaryMismatchError):
        ID2 + Morphism.identity(3)


def test_lincomb_examples():
    x, y = Morphism.of(elementary(3, 1)), Morphism.of(elementary(3, 2))
    assert lincomb([(Scalar.one(), x), (Scalar.zero(), y)]) == x
    assert lincomb([(Scalar.one(), x), (Scalar(-1), x)]).is_zero
    p2 = lincomb([(Scalar.one(), ID2), (-qratio(1, 2), E1)])
    assert p2 == P2 and p2.is_idempotent()
    with pytest.raises(ValueError):
        lincomb([])
    with pytest.raises(BoundaryMismatchError):
        lincomb([(Scalar.one(), x), (Scalar.one(), ID2)])


@given(a=morphisms(2, 2), b=morphisms(2, 2), s=coeffs)
@settings(max_examples=60)
def test_linear_laws(a, b, s):
    assert a + b == b + a
    assert a - a == Morphism.zero(2)
    assert s * (a + b) == s * a + s * b
    assert (a + b) * s == a * s + b * s


# -- composition ------------------------------------------------------------------

def test_compose_circle_relation():
    assert E1.compose(E1) == Scalar(quantum_int(2)) * E1


def test_compose_identity_law():
    for m in enumerate_basis(3, 3):
        x = Morphism.of(m, qratio(2, 3))
        assert Morphism.identity(3).compose(x) == x
        assert x.compose(Morphism.identity(3)) == x


def test_p2_kills_e1():
    assert P2.compose(E1).is_zero
    assert E1.compose(P2).is_zero


def test_compose_boundary_mismatch():
    with pytest.raises(BoundaryMismatchError):
        ID2.compose(Morphism.identity(3))


@given(a=morphisms(2, 2), b=morphisms(2, 2), c=morphisms(2, 2))
@settings(max_examples=40, deadline=None)
def test_compose_bilinear_and_associative(a, b, c):
    assert a.compose(b + c) == a.compose(b) + a.compose(c)
    assert (a + b).compose(c) == a.compose(c) + b.compose(c)
    assert a.compose(b).compose(c) == a.compose(b.compose(c))


@given(data=st.data())
@settings(max_examples=40, deadline=None)
def test_compose_associative_rectangular(data):
    a = data.draw(morphisms(1, 3, 2))
    b = data.draw(morphisms(3, 1, 2))
    c = data.draw(morphisms(1, 1, 2))
    assert a.compose(b).compose(c) == a.compose(b.compose(c))


# -- tensor ------------------------------------------------------------------------

def test_tensor_examples():
    t = P2.tensor(Morphism.identity(1))
    assert (t.n_bottom, t.n_top) == (3, 3)
    assert t.coeff(identity(3)) == Scalar.one()
    assert t.coeff(elementary(3, 1)) == -qratio(1, 2)
    assert P2.tensor(Morphism.identity(0)) == P2
    assert Morphism.identity(0).tensor(P2) == P2


@given(a=morphisms(1, 1), b=morphisms(2, 2))
@settings(max_examples=40)
def test_tensor_bilinear(a, b):
    one = Morphism.identity(1)
    assert (a + a).tensor(b) == a.tensor(b) + a.tensor(b)
    assert one.tensor(b + b) == one.tensor(b) + one.tensor(b)


def test_tensor_zero_absorbing():
    z = Morphism.zero(2)
    assert z.tensor(P2).is_zero and P2.tensor(z).is_zero
    assert z.compose(z).is_zero


# -- reflect -----------------------------------------------------------------------

def test_reflect_zero_and_shape():
    assert Morphism.zero(2, 4).reflect() == Morphism.zero(4, 2)
    t = Morphism.of(enumerate_basis(2, 4)[0], qratio(1, 2))
    r = t.reflect()
    assert (r.n_bottom, r.n_top) == (4, 2)
    assert r.reflect() == t


@given(a=morphisms(2, 2), b=morphisms(2, 2))
@settings(max_examples=40, deadline=None)
def test_reflect_antihomomorphism(a, b):
    assert a.compose(b).reflect() == b.reflect().compose(a.reflect())


# -- through-degree -----------------------------------------------------------------

def test_through_degree_examples():
    assert (Scalar(quantum_int(2)) * E1).through_degree() == 0
    assert P2.through_degree() == 2
    with pytest.raises(ValueError):
        Morphism.zero(2).through_degree()


@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_through_degree_filtration(data):
    a = data.draw(morphisms(2, 2, 2))
    b = data.draw(morphisms(2, 2, 2))
    prod = a.compose(b)
    if a.is_zero or b.is_zero or prod.is_zero:
        return
    assert prod.through_degree() <= min(a.through_degree(), b.through_degree())


# -- idempotence ---------------------------------------------------------------------

def test_is_idempotent_examples():
    assert Morphism.identity(3).is_idempotent()
    assert not E1.is_idempotent()
    assert (qratio(1, 2) * E1).is_idempotent()
    with pytest.raises(BoundaryMismatchError):
        Morphism.zero(2, 4).is_idempotent()


# -- equality, rendering, wire format --------------------------------------------------

def test_equality_requires_boundary():
    assert Morphism.zero(2) != Morphism.zero(3)
    assert Morphism.zero(2) == Morphism.zero(2, 2)


def test_terms_sorted_canonically():
    ts = P2.terms()
    assert [m for m, _ in ts] == sorted(m for m, _ in ts)


def test_str_contains_terms():
    s = str(P2)
    assert "(0 3)(1 2)" in s and "(0 1)(2 3)" in s
    assert "0 of TL(2,2)" == str(Morphism.zero(2))


def test_json_round_trip():
    m = P2.tensor(Morphism.identity(1)) + qratio(2, 3) * Morphism.of(elementary(3, 2))
    data = m.to_json_dict()
    assert Morphism.from_json_dict(data) == m
    mats = [t["matching"]["pairs"] for t in data["terms"]]
    assert mats == sorted(mats)


def test_immutable():
    with pytest.raises(AttributeError):
        P2.n_bottom = 5
