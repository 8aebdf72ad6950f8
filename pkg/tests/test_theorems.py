from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chernsub import theorems
from chernsub.cobord import GradedClass, cp_product
from chernsub.geommodel import Bundle, ProjProduct, normal_numbers
from chernsub.pseries import Poly
from chernsub.symfunc import BigradedElement, partitions_of

hy, hz = BigradedElement.hy, BigradedElement.hz

SMALL = [ProjProduct(tuple(lam)) for n in range(1, 5) for lam in partitions_of(n)
         if len(lam) <= 3]


@pytest.mark.parametrize("model", SMALL, ids=str)
def test_master_relation(model):
    r = theorems.thm3(model)
    assert r.equal and r.details["homogeneous"]


def test_master_relation_cp1_value():
    r = theorems.thm3(ProjProduct((1,)))
    assert r.lhs == -2 * hz(1) - 2 * hy(1)


def test_rhs_uses_only_class_data():
    # swapping each dual for another representative of the same class changes nothing
    model = ProjProduct((2, 1))
    duals = theorems.submanifold_duals(model, Bundle.normal(model))
    rebuilt = {lam: GradedClass([c for c in cls.components.values()])
               for lam, cls in duals.items()}
    whole = normal_numbers(model)
    assert theorems.rhs_from_duals(whole, rebuilt) == theorems.thm3_rhs(model)
    assert theorems.rhs_from_duals(cp_product(model.dims), duals) == theorems.thm3_rhs(model)


@pytest.mark.parametrize("n", range(1, 5))
def test_chi_y_relation_cp(n):
    r = theorems.thm4_1(ProjProduct((n,)))
    assert r.equal
    assert r.rhs == Poly([1, 1]) ** n


def test_chi_y_relation_cp2_terms():
    r = theorems.thm4_1(ProjProduct((2,)))
    # (1 - y + y^2) + y (3 - 3y) + 3 y^2 = (1 + y)^2
    assert r.details == {"chi_y[c_1]": "3 - 3*y", "chi_y[c_2]": "3"}
    assert theorems.thm4_1_at(r, -1) == (0, 0)
    assert theorems.thm4_1_at(r, 1) == (4, 4)


@pytest.mark.parametrize("dims,value", [((2,), -2), ((1, 1), 0), ((2, 2), 4), ((4,), 6)])
def test_signature_relation(dims, value):
    r = theorems.thm4_2(ProjProduct(dims))
    assert r.equal and r.lhs == value


def test_signature_relation_rejects_odd():
    with pytest.raises(ValueError):
        theorems.thm4_2(ProjProduct((3,)))


@pytest.mark.parametrize("dims", [(2,), (1, 1), (4,), (3, 1), (2, 2), (2, 1, 1)])
def test_bv_congruence(dims):
    assert theorems.bv_congruence(ProjProduct(dims)).equal


def test_alpha():
    assert [theorems.alpha(n) for n in range(1, 8)] == [1, 1, 2, 1, 2, 2, 3]


@pytest.mark.parametrize("dims,vec", [((1,), (1,)), ((1,), (-1,)), ((2,), (-1,)),
                                      ((1, 1), (1, 0)), ((3,), (-1,)), ((2, 1), (0, -1))])
def test_general_bundle_relation_lines(dims, vec):
    model = ProjProduct(dims)
    assert theorems.thm5_1(model, Bundle.line(vec)).equal


def test_general_bundle_cp1_value():
    r = theorems.thm5_1(ProjProduct((1,)), Bundle.line((1,)))
    assert r.lhs == r.rhs == hz(1) - 2 * hy(1)


def test_general_bundle_sums_and_conjugates():
    cp2 = ProjProduct((2,))
    o1 = Bundle.line((1,))
    assert theorems.thm5_1(cp2, o1 + o1).equal
    assert theorems.thm5_1(cp2, Bundle.tangent(cp2).conj()).equal
    assert theorems.thm5_1(ProjProduct((2, 2)), Bundle.tangent(ProjProduct((2, 2))).conj()).equal


def test_integrality_zero_bundle():
    r = theorems.cor_as(ProjProduct((1,)), Bundle.zero())
    assert r.lhs == BigradedElement.scalar(1) - 2 * hy(1)


@given(st.sampled_from([m for m in SMALL if m.n <= 3]),
       st.lists(st.integers(-2, 2), min_size=3, max_size=3))
@settings(max_examples=30, deadline=None)
def test_integrality_property(model, vec):
    bundle = Bundle.line(vec[:model.rank])
    assert theorems.cor_as(model, bundle).lhs.is_integral()


@pytest.mark.parametrize("dims", [(1, 1), (1,), (1, 1, 1), (3, 1), (2, 1, 1)])
def test_euler_parity(dims):
    r = theorems.euler_even(ProjProduct(dims))
    assert r.equal
    assert r.details["pairing"] == str(Fraction(r.details["chi"], 2))
    assert r.details["matches_cor_as"]


def test_euler_parity_cp1_squared():
    r = theorems.euler_even(ProjProduct((1, 1)))
    assert r.details["chi"] == 4 and r.details["pairing"] == "2"
    assert r.lhs == -2


def test_euler_parity_needs_line_factor():
    with pytest.raises(ValueError):
        theorems.euler_even(ProjProduct((2,)))


def test_specializations():
    y = Poly.gen("y")
    lhs, rhs = theorems.chi_y_specialization(ProjProduct((1,)))
    assert lhs == rhs == 1 + y
    assert theorems.signature_specialization(ProjProduct((2,))) == (-2, -2)
    rel = theorems.thm3_lhs(ProjProduct((2,)))
    assert theorems.specialize_relation(rel) is rel


def test_oracle_reports():
    assert theorems.fgl_involution(5).equal
    for N in range(1, 7):
        assert theorems.cauchy_report(N).equal
    for model in SMALL:
        assert theorems.euler_point_count(model).equal
        assert theorems.antipode_routes(model).equal
