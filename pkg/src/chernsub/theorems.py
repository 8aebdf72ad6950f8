"""Both sides of each relation between Chern numbers of a manifold and of
its virtual Chern submanifolds, computed by independent routes.

Left-hand sides come from Chern-number vectors and characteristic
series; right-hand sides come from the cobordism classes of dual
submanifolds produced by :mod:`chernsub.geommodel`.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import time

from . import cobord, pseries
from .cobord import CobordClass, GradedClass, s_star_y
from .geommodel import (Bundle, CohoPoly, ProjProduct, chern_class_submanifold,
                        chern_classes, chern_submanifold, cobordism_chern_classes, euler_char,
                        multiplicative_class, normal_numbers, pair,
                        pontryagin_submanifold, tangent_numbers)
from .pseries import Poly, TruncSeries, coeff_profile
from .symfunc import (EMPTY, BigradedElement, cauchy_exponential_form, cauchy_product_form,
                      cauchy_sum_form, h_values_of_variables, partitions_upto)


@dataclass
class VerificationReport:
    relation: str
    manifold: str
    bundle: str | None
    lhs: object
    rhs: object
    equal: bool
    degrees: list = field(default_factory=list)
    millis: float = 0.0
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.equal)


def _report(relation, model, bundle, lhs, rhs, start, degrees=None, details=None, equal=None):
    if equal is None:
        equal = lhs == rhs
    return VerificationReport(
        relation=relation,
        manifold=str(model),
        bundle=bundle,
        lhs=lhs,
        rhs=rhs,
        equal=bool(equal),
        degrees=list(degrees if degrees is not None else range(model.n + 1)),
        millis=round((time.perf_counter() - start) * 1000, 3),
        details=details or {},
    )


def _class_of(M):
    return normal_numbers(M) if isinstance(M, ProjProduct) else M


# -- the master relation ----------------------------------------------------------

def thm3_lhs(M):
    """<T_tau(nu), [M]> = sum_lam coeff_profile(T_1 T_2, lam) m_lam(M)."""
    M = _class_of(M)
    series = pseries.t_tau_series(max(M.dim, 1))
    total = BigradedElement()
    for lam, c in M.normal_m.items():
        total = total + coeff_profile(series, lam) * c
    return total


def rhs_from_duals(whole, duals):
    """S*(M) + sum_lam h_lam(z) S*([m_lam]) from given dual classes."""
    total = s_star_y(whole)
    for lam, cls in duals.items():
        if lam:
            total = total + BigradedElement.hz(*lam) * s_star_y(cls)
    return total


def submanifold_duals(model, bundle):
    """{lam: [m_lam(bundle)]} for 0 < |lam| <= dim M, from the geometric oracle."""
    classes = cobordism_chern_classes(model, bundle)
    return {lam: chern_submanifold(model, lam, bundle, classes)
            for lam in partitions_upto(model.n) if lam}


def thm3_rhs(model):
    """S*(M) + sum_lam h_lam(z) S*([m_lam(nu(M))]) with duals from the oracle."""
    duals = submanifold_duals(model, Bundle.normal(model))
    return rhs_from_duals(normal_numbers(model), duals)


def thm3(model):
    start = time.perf_counter()
    lhs, rhs = thm3_lhs(model), thm3_rhs(model)
    homogeneous = lhs.is_homogeneous(model.n) and rhs.is_homogeneous(model.n)
    return _report("thm3", model, "nu", lhs, rhs, start,
                   details={"homogeneous": homogeneous})


# -- chi_y relation ---------------------------------------------------------------

def _order(model):
    return max(model.n, 1)


def thm4_1(model):
    """(1+y)^n T(M) = chi_y(M) + sum_k y^k chi_y([c_k(tau)])."""
    start = time.perf_counter()
    n = model.n
    M = normal_numbers(model)
    y = Poly.gen("y")
    lhs = (1 + y) ** n * cobord.genus(M, pseries.todd_reciprocal(_order(model)))
    chi_normal = pseries.chi_y_normal(_order(model))
    classes = cobordism_chern_classes(model, Bundle.tangent(model))
    rhs = _as_poly(cobord.genus(M, chi_normal))
    terms = {}
    for k in range(1, n + 1):
        dual = chern_class_submanifold(model, k, None, classes)
        terms[k] = _as_poly(cobord.genus(dual, chi_normal))
        rhs = rhs + y ** k * terms[k]
    details = {f"chi_y[c_{k}]": str(v) for k, v in terms.items()}
    return _report("thm4.1", model, "tau", lhs, rhs, start, details=details)


def _as_poly(value, var="y"):
    return value if isinstance(value, Poly) else Poly([value], var)


def thm4_1_at(report, value):
    """Evaluate both sides of a chi_y report at y = value."""
    return report.lhs(value), report.rhs(value)


# -- signature relation ------------------------------------------------------------

def _pontryagin_sum(model):
    """sigma(M) + sum_k (-1)^k sigma([P_k(tau)])."""
    M = normal_numbers(model)
    total = Fraction(cobord.signature(M))
    parts = {}
    for k in range(1, model.n // 2 + 1):
        parts[k] = Fraction(cobord.signature(pontryagin_submanifold(model, k)))
        total += (-1) ** k * parts[k]
    return total, parts


def _check_dim4(model):
    if model.n % 2:
        raise ValueError(f"{model} has real dimension {2 * model.n}, not divisible by 4")


def thm4_2(model):
    """2^{4k} A-hat(M^{4k}) = sigma(M) + sum (-1)^j sigma([P_j(tau)])."""
    _check_dim4(model)
    start = time.perf_counter()
    M = normal_numbers(model)
    lhs = cobord.genus(M, pseries.ahat_scaled_normal(_order(model)))
    rhs, parts = _pontryagin_sum(model)
    details = {f"sigma[P_{k}]": str(v) for k, v in parts.items()}
    details["ahat"] = str(cobord.ahat(M))
    return _report("thm4.2", model, "tau", lhs, rhs, start, details=details)


def alpha(n):
    """Number of ones in the binary expansion of n."""
    return bin(n).count("1")


def bv_congruence(model):
    """sigma(M) + sum (-1)^k sigma([P_k]) = 0 mod 2^alpha(k), real dim 4k."""
    _check_dim4(model)
    start = time.perf_counter()
    value, _ = _pontryagin_sum(model)
    modulus = 2 ** alpha(model.n // 2)
    integral = value.denominator == 1
    residue = value % modulus if integral else value
    return _report("bv", model, "tau", residue, Fraction(0), start,
                   details={"value": str(value), "modulus": modulus, "integral": integral},
                   equal=integral and residue == 0)


# -- general bundles ------------------------------------------------------------------

def thm5_1_lhs(model, bundle):
    """<T_1(eta) T_2(nu), [M]> in cohomology."""
    order = _order(model)
    cls = multiplicative_class(model, bundle, pseries.t1_series(order)) \
        * multiplicative_class(model, Bundle.normal(model), pseries.t2_series(order))
    value = pair(model, cls)
    return value if isinstance(value, BigradedElement) else BigradedElement.scalar(value)


def thm5_1_rhs(model, bundle):
    duals = submanifold_duals(model, bundle)
    return rhs_from_duals(normal_numbers(model), duals)


def thm5_1(model, bundle, label=None):
    start = time.perf_counter()
    lhs, rhs = thm5_1_lhs(model, bundle), thm5_1_rhs(model, bundle)
    return _report("thm5.1", model, label or repr(bundle.lines), lhs, rhs, start)


def cor_as_value(model, bundle):
    """<T_A(eta) T_B(nu), [M]>."""
    order = _order(model)
    cls = multiplicative_class(model, bundle, pseries.ta_series(order)) \
        * multiplicative_class(model, Bundle.normal(model), pseries.tb_series(order))
    value = pair(model, cls)
    return value if isinstance(value, BigradedElement) else BigradedElement.scalar(value)


def cor_as(model, bundle, label=None):
    """Integrality of <T_A(eta) T_B(nu), [M]>: rhs is the coefficientwise integer part."""
    start = time.perf_counter()
    value = cor_as_value(model, bundle)
    fractional = [str(c) for c in value.coeffs.values() if c.denominator != 1]
    return _report("cor-as", model, label or repr(bundle.lines), value, value.integer_part(),
                   start, details={"non_integral": fractional})


# -- Euler characteristic parity ---------------------------------------------------------

def line_factors(model):
    """Indices of CP^1 factors; their tangent bundles are tangent line subbundles."""
    return [i for i, d in enumerate(model.dims) if d == 1]


def euler_even_polynomial(model, line_index):
    """<x/(1-e^{-x}) prod_i x_i (1 - z (1-e^{-x_i}))/(1-e^{-x_i}), [M]> in Q[z].

    x is c_1 of the tangent line of factor ``line_index`` and the x_i are
    the (stable) Chern roots of its complement tau_1.
    """
    order = _order(model)
    z = Poly.gen("z")
    vec = [0] * model.rank
    vec[line_index] = 2
    line = Bundle.line(vec)
    tau_1 = Bundle.tangent(model) - line
    todd = pseries.todd_series(order)
    v = pseries.one_minus_exp_neg(order)
    factor = todd.map(lambda c: Poly([c], "z")) * (1 - v.map(lambda c: c * z))
    cls = multiplicative_class(model, line, todd) * multiplicative_class(model, tau_1, factor)
    value = pair(model, cls)
    return _as_poly(value, "z")


def euler_even_from_cor_as(model, line_index):
    """The same polynomial obtained by specializing the integrality value

    for eta = eta_1 + nu at z_1 = z, z_2 = ... = 0 and all y_j = 0.
    """
    vec = [0] * model.rank
    vec[line_index] = 2
    value = cor_as_value(model, Bundle.line(vec) + Bundle.normal(model))
    z = Poly.gen("z")
    n = max(model.n, 1)
    return value.specialize([0] * n, h_values_of_variables([z], n))


def euler_even(model, line_index=None):
    """z^{n-1} coefficient of the parity polynomial versus chi(M)/2."""
    admissible = line_factors(model)
    if not admissible:
        raise ValueError(f"{model} has no CP(1) factor providing a tangent line subbundle")
    if line_index is None:
        line_index = admissible[0]
    if line_index not in admissible:
        raise ValueError(f"factor {line_index} of {model} is not a CP(1)")
    start = time.perf_counter()
    n = model.n
    poly = euler_even_polynomial(model, line_index)
    coeff = poly.coeffs[n - 1] if len(poly.coeffs) >= n else Fraction(0)
    chi = euler_char(model)
    # <(x/2) prod x_i, [M]> with x_i the stable roots of tau_1
    vec = [0] * model.rank
    vec[line_index] = 2
    tau_1 = Bundle.tangent(model) - Bundle.line(vec)
    top = chern_classes(model, tau_1)[n - 1]
    pairing = pair(model, top * CohoPoly.linear(model, vec, Fraction(1, 2)))
    # the z^{n-1} coefficient carries the sign (-1)^{n-1} from prod(-x_i)
    expected = (-1) ** (n - 1) * Fraction(chi, 2)
    via_cor = euler_even_from_cor_as(model, line_index)
    details = {
        "polynomial": str(poly),
        "pairing": str(pairing),
        "chi": chi,
        "chi_even": chi % 2 == 0,
        "integral": Fraction(coeff).denominator == 1,
        "matches_cor_as": via_cor == poly,
        "z_degree": poly.degree,
    }
    equal = (coeff == expected and pairing == Fraction(chi, 2) and via_cor == poly
             and Fraction(coeff).denominator == 1)
    return _report("euler-even", model, f"tau(CP(1) factor {line_index})", Fraction(coeff),
                   expected, start, degrees=[n - 1], details=details, equal=equal)


# -- specializations of the master relation ----------------------------------------

def specialize_relation(rel, y_series=None, z_values=None):
    """Apply h_a(y) -> y_series[a] and h_a(z) -> h_a(z_1, ..., z_r).

    With no substitution the element is returned unchanged.
    """
    if y_series is None and z_values is None:
        return rel
    if y_series is None or z_values is None:
        raise ValueError("both slots must be specialized together")
    degree = max((ly.weight + lz.weight for ly, lz in rel.coeffs), default=0)
    if degree > y_series.order:
        raise ValueError(f"y-series order {y_series.order} below degree {degree}")
    return rel.specialize(y_series, h_values_of_variables(z_values, max(degree, 1)))


def chi_y_specialization(model):
    """The master relation at z_1 = -y and S*_(y)(x) = 1/Q(x): returns (lhs, rhs) in Q[y]."""
    y = Poly.gen("y")
    ys = pseries.chi_y_normal(_order(model))
    return (specialize_relation(thm3_lhs(model), ys, [-y]),
            specialize_relation(thm3_rhs(model), ys, [-y]))


def signature_specialization(model):
    """The master relation at z_1 = -z_2 = 1 and S*_(y)(x) = tanh(x)/x: returns (lhs, rhs)."""
    ys = pseries.signature_normal(_order(model))
    return (specialize_relation(thm3_lhs(model), ys, [1, -1]),
            specialize_relation(thm3_rhs(model), ys, [1, -1]))


# -- oracle self-consistency -------------------------------------------------------

def cauchy_report(N):
    """The three forms of the Cauchy kernel agree in degree N."""
    start = time.perf_counter()
    prod_form = cauchy_product_form(N)
    exp_form, sum_form = cauchy_exponential_form(N), cauchy_sum_form(N)
    lhs = _kernel_element(prod_form)
    return VerificationReport(
        relation="cauchy", manifold="pt", bundle=f"degree {N}", lhs=lhs,
        rhs=_kernel_element(sum_form), equal=prod_form == exp_form == sum_form,
        degrees=[N], millis=round((time.perf_counter() - start) * 1000, 3),
        details={"exponential_agrees": exp_form == prod_form, "y_basis": "m"})


def _kernel_element(form):
    # (lam_z, mu_y) -> coefficient of h_lam(z) m_mu(y); m_mu(y) is stored in the y slot
    return BigradedElement({(mu, lam): c for (lam, mu), c in form.items()})


def euler_point_count(model):
    """Point count of the dual of the top cobordism Chern class versus chi(M)."""
    start = time.perf_counter()
    top = chern_class_submanifold(model, model.n, Bundle.tangent(model))
    count = top.component(0).number(EMPTY)
    return _report("oracle-euler", model, "tau", count, Fraction(euler_char(model)), start,
                   degrees=[model.n])


def antipode_routes(model):
    """Tangent numbers computed on the roots agree with the antipode of the normal numbers."""
    start = time.perf_counter()
    direct = {k: Fraction(v) for k, v in tangent_numbers(model).items() if v}
    via = normal_numbers(model).tangent_m
    return _report("oracle-antipode", model, "tau", BigradedElement(
        {(k, EMPTY): v for k, v in direct.items()}),
        BigradedElement({(k, EMPTY): v for k, v in via.items()}), start, degrees=[model.n])


def fgl_involution(order):
    """iota(iota(u)) = u for the cobordism formal group law."""
    start = time.perf_counter()
    iota = cobord.fgl_inverse(order)
    twice = iota.compose(iota)
    u = TruncSeries.variable(order, GradedClass.scalar(1))
    equal = all(twice[k] == u[k] for k in range(order + 1))
    return VerificationReport(
        relation="oracle-iota", manifold="pt", bundle=f"order {order}",
        lhs=[str(twice[k]) for k in range(order + 1)],
        rhs=[str(u[k]) for k in range(order + 1)], equal=equal,
        degrees=list(range(order + 1)),
        millis=round((time.perf_counter() - start) * 1000, 3))


GENERA = {
    "todd": cobord.todd,
    "chiy": cobord.chi_y,
    "sign": cobord.signature,
    "ahat": cobord.ahat,
    "euler": cobord.euler,
}


def genus_value(name, model):
    if name not in GENERA:
        raise ValueError(f"unknown genus {name!r}; choose from {sorted(GENERA)}")
    value = GENERA[name](normal_numbers(model))
    return value if isinstance(value, Poly) else Fraction(value)


def genus_report(name, model, expected):
    start = time.perf_counter()
    value = genus_value(name, model)
    return _report(f"genus-{name}", model, None, value, expected, start)


__all__ = [
    "VerificationReport", "thm3_lhs", "thm3_rhs", "thm3", "rhs_from_duals",
    "submanifold_duals", "thm4_1", "thm4_1_at", "thm4_2", "alpha", "bv_congruence",
    "thm5_1", "thm5_1_lhs", "thm5_1_rhs", "cor_as", "cor_as_value", "euler_even",
    "euler_even_polynomial", "euler_even_from_cor_as", "line_factors",
    "specialize_relation", "chi_y_specialization", "signature_specialization",
    "cauchy_report", "euler_point_count", "antipode_routes", "fgl_involution",
    "GENERA", "genus_value", "genus_report",
    "CobordClass", "GradedClass", "TruncSeries", "EMPTY",
]
