import pytest
from hypothesis import given, settings

import road_network
from gen import matrices, matrix_groups
from ivifm import (
    COMPLETE_NULL,
    MATRIX_OPERATORS,
    ONE,
    ZERO,
    DimensionMismatch,
    IvifMatrix,
    ValidationError,
    add,
    complement,
    ivif,
    make_special,
    matrix_eq,
    matrix_isclose,
    matrix_le,
    matrix_zip,
    mul,
    odot,
    oplus,
    transpose,
    value_add,
)


class TestConstruction:
    def test_shape_and_indexing(self, a_t):
        assert a_t.shape == (3, 3)
        assert a_t[1, 2] == ivif(.7, .8, 0, .1)
        assert list(a_t.values())[0] == ZERO

    def test_rejects_empty(self):
        with pytest.raises(ValidationError):
            IvifMatrix(())
        with pytest.raises(ValidationError):
            IvifMatrix(((),))

    def test_rejects_ragged(self):
        with pytest.raises(ValidationError):
            IvifMatrix(((ONE, ONE), (ONE,)))

    def test_rejects_non_values(self):
        with pytest.raises(ValidationError):
            IvifMatrix(((ONE, (0, 0, 1, 1)),))

    def test_from_bounds_validates(self):
        with pytest.raises(ValidationError):
            IvifMatrix.from_bounds([[(.6, .7, .5, .5)]])

    def test_accepts_lists(self):
        assert IvifMatrix([[ONE, ZERO]]) == IvifMatrix(((ONE, ZERO),))


class TestRoadNetworkExample:
    def test_product(self, a_t, a_t_prime):
        assert mul(a_t, a_t_prime) == road_network.EXPECTED_PRODUCT
        assert a_t * a_t_prime == road_network.EXPECTED_PRODUCT

    def test_sum(self, a_t, a_t_prime):
        assert add(a_t, a_t_prime) == road_network.EXPECTED_SUM

    def test_asymmetric_t_prime_is_inconsistent(self, a_t):
        # the asymmetric (2,1) entry cannot yield the expected (2,1) of the product
        skewed = road_network.A_T_PRIME_ASYMMETRIC
        assert skewed != transpose(skewed)
        assert mul(a_t, skewed)[1, 0] != road_network.EXPECTED_PRODUCT[1, 0]

    def test_product_below_sum(self, a_t, a_t_prime):
        assert matrix_le(a_t * a_t_prime, a_t + a_t_prime)

    def test_complement_swaps_crowdness_and_loneliness(self):
        m = road_network.SIX_CITY_MATRIX
        c = complement(m)
        for x, y in zip(m.values(), c.values()):
            assert (y.mu, y.nu) == (x.nu, x.mu)

    def test_a_t_symmetric(self, a_t):
        assert transpose(a_t) == a_t


def test_zip_shape_mismatch():
    a = make_special("c-null", 2)
    b = IvifMatrix(((ONE, ONE, ONE),) * 2)
    for op in MATRIX_OPERATORS.values():
        with pytest.raises(DimensionMismatch):
            op(a, b)
    with pytest.raises(DimensionMismatch):
        matrix_le(a, b)


def test_zip_with_c_null(a_t):
    r = matrix_zip(value_add, a_t, make_special("c-null", 3))
    for x, y in zip(a_t.values(), r.values()):
        assert y.mu == x.mu and tuple(y.nu) == (0, 0)
    assert matrix_le(a_t, r)


def test_transpose_shape():
    m = IvifMatrix(((ONE, ZERO, COMPLETE_NULL),))
    assert transpose(m).shape == (3, 1)
    assert transpose(m)[2, 0] == COMPLETE_NULL
    assert m.T.T == m
    one = IvifMatrix(((ONE,),))
    assert transpose(one) == one


class TestSpecial:
    def test_a_unit(self):
        assert make_special("a-unit", 2) == IvifMatrix(((ONE, ZERO), (ZERO, ONE)))

    def test_c_null(self):
        assert make_special("c-null", 1) == IvifMatrix(((ivif(0, 0, 0, 0),),))

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_patterns(self, n):
        assert complement(make_special("a-unit", n)) == make_special("r-unit", n)
        assert complement(make_special("a-null", n)) == make_special("r-null", n)
        assert complement(make_special("c-null", n)) == make_special("c-null", n)
        assert set(make_special("a-null", n).values()) == {ZERO}
        assert set(make_special("r-null", n).values()) == {ONE}

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            make_special("b-unit", 2)
        with pytest.raises(ValueError):
            make_special("a-unit", 0)


# laws, exact for the lattice operators

@given(matrix_groups(2))
def test_add_mul_commutative(ab):
    a, b = ab
    assert a + b == b + a
    assert a * b == b * a


@given(matrix_groups(3))
def test_add_mul_associative(abc):
    a, b, c = abc
    assert a + (b + c) == (a + b) + c
    assert a * (b * c) == (a * b) * c


@given(matrix_groups(3))
def test_mul_distributes_over_add(abc):
    a, b, c = abc
    assert a * (b + c) == a * b + a * c
    assert (b + c) * a == b * a + c * a


@given(matrix_groups(3))
def test_oplus_odot_laws(abc):
    a, b, c = abc
    assert oplus(a, b) == oplus(b, a)
    assert odot(a, b) == odot(b, a)
    assert matrix_isclose(oplus(a, oplus(b, c)), oplus(oplus(a, b), c), 1e-9)
    assert matrix_isclose(odot(a, odot(b, c)), odot(odot(a, b), c), 1e-9)


def test_oplus_odot_not_distributive():
    h = IvifMatrix(((ivif(.5, .5, .5, .5),),))
    lhs = odot(h, oplus(h, h))
    rhs = oplus(odot(h, h), odot(h, h))
    assert lhs[0, 0].bounds == pytest.approx((.375, .375, .625, .625), abs=1e-12)
    assert rhs[0, 0].bounds == pytest.approx((.4375, .4375, .5625, .5625), abs=1e-12)
    assert not matrix_isclose(lhs, rhs)
    # the other side is the same by commutativity
    assert odot(oplus(h, h), h) == lhs


def test_oplus_odot_distributive_on_degenerate_input():
    z = make_special("c-null", 2)
    assert odot(z, oplus(z, z)) == oplus(odot(z, z), odot(z, z))


@given(matrix_groups(1))
def test_add_idempotent(a):
    (a,) = a
    assert a + a == a


@given(matrix_groups(1))
def test_add_c_null_dominates(a):
    (a,) = a
    null = IvifMatrix.filled(a.rows, a.cols, COMPLETE_NULL)
    assert matrix_le(a, a + null)
    if a.is_square:
        assert null == make_special("c-null", a.rows)


@given(matrix_groups(2))
def test_involutions_and_de_morgan(ab):
    a, b = ab
    assert complement(complement(a)) == a
    assert transpose(transpose(a)) == a
    assert complement(a + b) == complement(a) * complement(b)
    assert complement(a * b) == complement(a) + complement(b)


@settings(max_examples=50)
@given(matrix_groups(2))
def test_matrix_order(ab):
    a, b = ab
    assert matrix_le(a, a) and matrix_eq(a, a)
    assert matrix_le(a * b, a) and matrix_le(a, a + b)
    assert matrix_eq(a, b) == (a == b)
    assert (a <= b) == matrix_le(a, b)


@given(matrices(2, 3))
def test_every_operator_output_is_valid(a):
    for op in MATRIX_OPERATORS.values():
        r = op(a, complement(a))
        assert r.shape == a.shape
        IvifMatrix(r.entries)
