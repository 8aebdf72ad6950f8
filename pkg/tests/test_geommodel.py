import pytest
from hypothesis import given, settings, strategies as st

from chernsub.cobord import cp, cp_product, format_class, product
from chernsub.geommodel import (Bundle, CohoPoly, ProjProduct, chern_class_submanifold,
                                chern_classes, chern_submanifold, euler_char, multiplicative_class,
                                normal_numbers, pair, pontryagin_submanifold, tangent_numbers)
from chernsub.pseries import signature_tangent

models = st.lists(st.integers(1, 3), min_size=1, max_size=3).filter(
    lambda d: sum(d) <= 4).map(lambda d: ProjProduct(tuple(d)))


def test_model_basics():
    M = ProjProduct((2, 1))
    assert M.n == 3 and M.rank == 2
    assert str(M) == "CP(2)*CP(1)"
    assert str(ProjProduct(())) == "pt"
    assert euler_char(M) == 6


def test_cohomology_truncation():
    M = ProjProduct((2,))
    x = CohoPoly.generator(M, 0)
    assert x ** 3 == CohoPoly.constant(M, 0)
    assert pair(M, x * x) == 1
    assert pair(M, x) == 0


def test_chern_classes_cp2():
    M = ProjProduct((2,))
    x = CohoPoly.generator(M, 0)
    c = chern_classes(M, Bundle.tangent(M))
    assert c[1] == 3 * x and c[2] == 3 * x * x


def test_normal_numbers_match_cobordism():
    assert normal_numbers(ProjProduct((2,))) == cp(2)
    assert normal_numbers(ProjProduct((2, 1))) == product(cp(2), cp(1))
    assert tangent_numbers(ProjProduct((2,))) == {(2,): 3, (1, 1): 3}


@given(models)
@settings(max_examples=15, deadline=None)
def test_tangent_routes_agree(M):
    direct = {k: v for k, v in tangent_numbers(M).items() if v}
    assert normal_numbers(M).tangent_m == direct
    assert normal_numbers(M) == cp_product(M.dims)


@given(models)
@settings(max_examples=15, deadline=None)
def test_top_chern_class_counts_euler_characteristic(M):
    top = chern_class_submanifold(M, M.n, Bundle.tangent(M))
    assert top.dims == [0]
    assert top.component(0).number(()) == euler_char(M)


def test_duals_cp2():
    M = ProjProduct((2,))
    tau = Bundle.tangent(M)
    assert format_class(chern_submanifold(M, (1,), tau)) == "3*CP(1)"
    assert format_class(chern_class_submanifold(M, 2, tau)) == "3*pt"
    assert format_class(pontryagin_submanifold(M, 1)) == "3*pt"


def test_dual_of_normal_on_cp1():
    M = ProjProduct((1,))
    assert format_class(chern_submanifold(M, (1,), Bundle.normal(M))) == "-2*pt"


def test_bundle_algebra():
    M = ProjProduct((1, 1))
    a = Bundle.line((1, 0))
    assert (a + a.conj()).conj() == a + a.conj()
    assert Bundle.normal(M) == -Bundle.tangent(M)
    assert Bundle.line((0, 0)) == Bundle.zero()
    assert a.is_cobordism_representable()
    assert not Bundle.line((1, 1)).is_cobordism_representable()
    assert Bundle.tangent(M).virtual_rank == 4


def test_non_representable_bundle_rejected():
    M = ProjProduct((1,))
    with pytest.raises(ValueError):
        chern_submanifold(M, (1,), Bundle.line((2,)))


def test_tangent_class_signature_cp2():
    # L-class of CP^2 integrates to the signature
    M = ProjProduct((2,))
    assert pair(M, multiplicative_class(M, Bundle.tangent(M), signature_tangent(2))) == 1
