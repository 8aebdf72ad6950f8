"""Products of complex projective spaces as a test universe.

For M = CP^{n_1} x ... x CP^{n_r} the cohomology ring is
Q[x_1..x_r]/(x_i^{n_i+1}) and the complex cobordism ring is
Omega[u_1..u_r]/(u_i^{n_i+1}).  Chern numbers come from the top
pairing; virtual submanifolds come from duals of monomials in the u_i,
u^a being dual to CP^{n-a}.  This gives an oracle for the cobordism
classes of Chern submanifolds that is independent of the series
machinery.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import permutations
from math import factorial, prod
import operator

from .cobord import CobordClass, GradedClass, cp_product, fgl_inverse
from .pseries import TruncSeries, one_like, unit_inverse
from .symfunc import EMPTY, Partition, SymFn, partitions_of, transition


@dataclass(frozen=True)
class ProjProduct:
    """CP^{n_1} x ... x CP^{n_r}; the empty tuple is the point."""

    dims: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if any(d < 0 for d in self.dims):
            raise ValueError(f"negative dimension in {self.dims}")

    @property
    def n(self):
        return sum(self.dims)

    @property
    def rank(self):
        return len(self.dims)

    def __str__(self):
        return "*".join(f"CP({d})" for d in self.dims) or "pt"


class CohoPoly:
    """Element of R[x_1..x_r]/(x_i^{n_i+1}) for a coefficient ring R."""

    __slots__ = ("model", "terms")

    def __init__(self, model, terms=None):
        self.model = model
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if any(a > d for a, d in zip(exps, model.dims)):
                continue
            clean[exps] = clean[exps] + c if exps in clean else c
        self.terms = {k: v for k, v in clean.items() if not _is_zero(v)}

    @classmethod
    def constant(cls, model, c):
        return cls(model, {(0,) * model.rank: c})

    @classmethod
    def generator(cls, model, i, coeff=Fraction(1)):
        exps = [0] * model.rank
        exps[i] = 1
        return cls(model, {tuple(exps): coeff})

    @classmethod
    def linear(cls, model, vector, coeff=Fraction(1)):
        """sum_i vector[i] x_i."""
        return sum((cls.generator(model, i, coeff * a) for i, a in enumerate(vector) if a),
                   cls(model))

    def _coerce(self, other):
        if isinstance(other, CohoPoly):
            return other
        return CohoPoly.constant(self.model, other)

    def one(self):
        ring_one = one_like(next(iter(self.terms.values()), Fraction(1)))
        return CohoPoly.constant(self.model, ring_one)

    def inverse_unit(self):
        """Inverse of unit constant + nilpotent part."""
        zero = (0,) * self.model.rank
        if zero not in self.terms:
            raise ValueError("constant term is zero")
        c0 = unit_inverse(self.terms[zero])
        nil = self * c0 - CohoPoly.constant(self.model, one_like(c0))
        out = acc = CohoPoly.constant(self.model, one_like(c0))
        for _ in range(self.model.n):
            acc = acc * (-nil)
            out = out + acc
        return out * c0

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return CohoPoly(self.model, out)

    __radd__ = __add__

    def __neg__(self):
        return CohoPoly(self.model, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CohoPoly):
            return CohoPoly(self.model, {k: v * other for k, v in self.terms.items()})
        out = {}
        dims = self.model.dims
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                if any(a > d for a, d in zip(e, dims)):
                    continue
                term = ca * cb
                out[e] = out[e] + term if e in out else term
        return CohoPoly(self.model, out)

    def __rmul__(self, other):
        return CohoPoly(self.model, {k: other * v for k, v in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            return self.inverse_unit() ** (-k)
        return reduce(operator.mul, [self] * k, self.one())

    def __eq__(self, other):
        other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms))

    def degree_part(self, d):
        """Terms whose monomial has total exponent d."""
        return CohoPoly(self.model, {k: v for k, v in self.terms.items() if sum(k) == d})

    def map(self, fn):
        return CohoPoly(self.model, {k: fn(v) for k, v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        out = []
        for exps, c in sorted(self.terms.items()):
            mono = "*".join(f"x{i + 1}^{a}" if a > 1 else f"x{i + 1}"
                            for i, a in enumerate(exps) if a)
            out.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(out)


def _is_zero(c):
    if isinstance(c, (int, Fraction)):
        return c == 0
    return not c


def pair(model, poly):
    """Kronecker pairing: the coefficient of the top monomial; 0 if absent."""
    top = model.dims
    if top in poly.terms:
        return poly.terms[top]
    sample = next(iter(poly.terms.values()), Fraction(0))
    return sample * 0


# -- bundles --------------------------------------------------------------------------

class Bundle:
    """Stable bundle as a Z-combination of line bundles.

    ``lines`` maps an integer vector a (first Chern class sum a_i x_i) to
    its multiplicity, which may be negative for virtual bundles.  The
    zero vector is the trivial line and is dropped.
    """

    __slots__ = ("lines",)

    def __init__(self, lines=None):
        clean = Counter()
        for vec, k in (lines.items() if isinstance(lines, dict) else lines or ()):
            vec = tuple(int(a) for a in vec)
            if any(vec) and k:
                clean[vec] += k
        self.lines = {v: k for v, k in clean.items() if k}

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def line(cls, vector):
        return cls({tuple(vector): 1})

    @classmethod
    def std(cls, model, i):
        vec = [0] * model.rank
        vec[i] = 1
        return cls.line(vec)

    @classmethod
    def tangent(cls, model):
        """tau + C^r = sum_i (n_i+1) O(e_i)."""
        lines = {}
        for i, d in enumerate(model.dims):
            vec = [0] * model.rank
            vec[i] = 1
            lines[tuple(vec)] = d + 1
        return cls(lines)

    @classmethod
    def normal(cls, model):
        return -cls.tangent(model)

    def __add__(self, other):
        out = Counter(self.lines)
        out.update(other.lines)
        return Bundle(out)

    def __neg__(self):
        return Bundle({v: -k for v, k in self.lines.items()})

    def __sub__(self, other):
        return self + (-other)

    def conj(self):
        return Bundle({tuple(-a for a in v): k for v, k in self.lines.items()})

    def __eq__(self, other):
        return isinstance(other, Bundle) and self.lines == other.lines

    def __hash__(self):
        return hash(frozenset(self.lines.items()))

    @property
    def virtual_rank(self):
        return sum(self.lines.values())

    def is_cobordism_representable(self):
        return all(sum(abs(a) for a in v) == 1 for v in self.lines)

    def tags(self):
        """Root tags std(i)/conj(i) with multiplicities; raises for other lines."""
        out = []
        for v, k in sorted(self.lines.items()):
            if not sum(abs(a) for a in v) == 1:
                raise ValueError(f"line bundle with c1 vector {v} has no cobordism root here")
            i = next(j for j, a in enumerate(v) if a)
            out.append((("std" if v[i] == 1 else "conj"), i, k))
        return out

    def check_model(self, model):
        for v in self.lines:
            if len(v) != model.rank:
                raise ValueError(f"line vector {v} does not match {model.rank} factors")

    def __repr__(self):
        return f"Bundle({self.lines})"


# -- characteristic numbers ---------------------------------------------------------

def euler_char(model):
    return prod(d + 1 for d in model.dims)


def _total_chern(model, bundle, root_of, one):
    """c_t = prod (1 + t*root)^mult as a series in t with CohoPoly coefficients."""
    n = model.n
    unit = CohoPoly.constant(model, one)
    total = TruncSeries.constant(unit, n)
    for vec, k in bundle.lines.items():
        factor = TruncSeries([unit, root_of(vec)], n)
        total = total * factor ** k
    return total


def _cohomology_root(model):
    return lambda vec: CohoPoly.linear(model, vec)


def chern_classes(model, bundle):
    """[c_0, ..., c_n] of a (virtual) bundle in rational cohomology."""
    bundle.check_model(model)
    return list(_total_chern(model, bundle, _cohomology_root(model), Fraction(1)))


def evaluate_symfn(f, classes):
    """Evaluate symmetric function f on roots whose elementary classes are ``classes``."""
    f = f.to("e")
    one = classes[0].one()
    total = classes[0] * 0
    for lam, c in f.coeffs.items():
        if lam.weight >= len(classes):
            continue
        term = reduce(operator.mul, (classes[a] for a in lam), one)
        total = total + term * c
    return total


def normal_numbers(model):
    """Normal Chern numbers via c(nu) = prod (1+x_i)^{-(n_i+1)} and the e-basis."""
    n = model.n
    classes = chern_classes(model, Bundle.normal(model))
    parts = partitions_of(n)
    to_e = transition("m", "e", n)
    out = {}
    for i, lam in enumerate(parts):
        f = SymFn("e", {mu: to_e[i][j] for j, mu in enumerate(parts)})
        val = pair(model, evaluate_symfn(f, classes))
        if val:
            out[lam] = val
    return CobordClass(n, out)


def _monomial_on_roots(model, lam, roots):
    """m_lam evaluated directly on an explicit list of CohoPoly roots."""
    one = CohoPoly.constant(model, Fraction(1))
    sym = prod(factorial(k) for k in Counter(lam).values())
    total = CohoPoly(model)
    for pos in permutations(range(len(roots)), len(lam)):
        term = one
        for idx, a in zip(pos, lam):
            term = term * roots[idx] ** a
            if not term.terms:
                break
        total = total + term
    return total * Fraction(1, sym)


def tangent_numbers(model):
    """Tangent Chern numbers from the root multiset {x_i with multiplicity n_i+1}."""
    n = model.n
    roots = []
    for i, d in enumerate(model.dims):
        roots += [CohoPoly.generator(model, i)] * (d + 1)
    out = {}
    for lam in partitions_of(n):
        if len(lam) > len(roots):
            continue
        val = pair(model, _monomial_on_roots(model, lam, roots))
        if val:
            out[lam] = val
    return out


def tangent_class(model):
    """The class of M computed from its tangent numbers."""
    return CobordClass.from_tangent(model.n, tangent_numbers(model))


def multiplicative_class(model, bundle, series):
    """prod over roots of series(root)^mult; series(0) must be a unit."""
    bundle.check_model(model)
    one = one_like(series[0])
    out = CohoPoly.constant(model, one)
    for vec, k in bundle.lines.items():
        root = CohoPoly.linear(model, vec)
        value = CohoPoly.constant(model, series[0])
        power = CohoPoly.constant(model, Fraction(1))
        for j in range(1, min(series.order, model.n) + 1):
            power = power * root
            if not power.terms:
                break
            value = value + power * series[j]
        out = out * value ** k
    return out


# -- cobordism level ---------------------------------------------------------------------

def _cobordism_root(model):
    iota = fgl_inverse(max(model.n, 1))

    def root_of(vec):
        i = next(j for j, a in enumerate(vec) if a)
        u = CohoPoly.generator(model, i, GradedClass.scalar(1))
        if vec[i] == 1:
            return u
        # conjugate line: iota(u_i), truncated by u_i^{n_i+1} = 0
        out = CohoPoly(model)
        power = CohoPoly.constant(model, GradedClass.scalar(1))
        for k in range(1, min(iota.order, model.dims[i]) + 1):
            power = power * u
            out = out + power * iota[k]
        return out
    return root_of


def cobordism_chern_classes(model, bundle):
    """[c^U_0, ..., c^U_n] with GradedClass coefficients."""
    bundle.check_model(model)
    if not bundle.is_cobordism_representable():
        raise ValueError(f"{bundle} is not representable at the cobordism level")
    return list(_total_chern(model, bundle, _cobordism_root(model), GradedClass.scalar(1)))


def cobordism_chern_poly(model, bundle, f, classes=None):
    """f evaluated on the cobordism Chern roots of the bundle."""
    if classes is None:
        classes = cobordism_chern_classes(model, bundle)
    return evaluate_symfn(f, classes)


def dual_class(model, poly):
    """Class of the virtual submanifold dual to a polynomial in the u_i."""
    total = GradedClass()
    for exps, coeff in poly.terms.items():
        sub = [d - a for a, d in zip(exps, model.dims)]
        if any(s < 0 for s in sub):
            continue
        total = total + coeff * GradedClass(cp_product(sub))
    return total


def chern_submanifold(model, lam, bundle, classes=None):
    """[m_lam(bundle)] as a GradedClass."""
    f = SymFn("m", {Partition(lam): 1})
    return dual_class(model, cobordism_chern_poly(model, bundle, f, classes))


def chern_class_submanifold(model, k, bundle, classes=None):
    """[c_k(bundle)] = dual of e_k on the cobordism roots."""
    if classes is None:
        classes = cobordism_chern_classes(model, bundle)
    if k >= len(classes):
        return GradedClass()
    return dual_class(model, classes[k])


def pontryagin_submanifold(model, k):
    """[P_k(tau)] = [(-1)^k c_{2k}(tau + conj(tau))]."""
    if 4 * k > 2 * model.n:
        raise ValueError(f"P_{k} needs real dimension >= {4 * k}")
    tau = Bundle.tangent(model)
    classes = cobordism_chern_classes(model, tau + tau.conj())
    return chern_class_submanifold(model, 2 * k, None, classes) * (-1) ** k


def whole_class(model):
    """[M] itself: the dual of 1."""
    return dual_class(model, CohoPoly.constant(model, GradedClass.scalar(1)))


__all__ = [
    "ProjProduct", "CohoPoly", "Bundle", "pair", "euler_char", "chern_classes",
    "normal_numbers", "tangent_numbers", "tangent_class", "multiplicative_class",
    "cobordism_chern_classes", "cobordism_chern_poly", "dual_class",
    "chern_submanifold", "chern_class_submanifold", "pontryagin_submanifold",
    "whole_class", "evaluate_symfn", "EMPTY",
]
