"""Rational complex cobordism of a point.

A class is stored by its normal Chern numbers m_lam(M) = <m_lam(nu), [M]>;
after tensoring with Q this is a faithful description.  Tangent numbers
are obtained through the antipode, never stored.
"""

from fractions import Fraction
from functools import cache, reduce
from math import factorial

from . import pseries
from .pseries import TruncSeries, coeff_profile
from .symfunc import (EMPTY, BigradedElement, Partition, antipode_matrix, matinv,
                      monomial_count, partition_key, partitions_of, splittings)


def _apply_antipode(numbers, n):
    parts = partitions_of(n)
    mat = antipode_matrix("m", n)
    out = {}
    for i, lam in enumerate(parts):
        total = sum((mat[i][j] * Fraction(numbers.get(mu, 0)) for j, mu in enumerate(parts)),
                    Fraction(0))
        if total:
            out[lam] = total
    return out


def normal_from_tangent(tangent_m, n):
    """Normal numbers from tangent numbers: m_lam(nu) = sum_mu S(m_lam)_mu m_mu(tau)."""
    return _apply_antipode(tangent_m, n)


def tangent_from_normal(normal_m, n):
    """Inverse of normal_from_tangent (the same map: the antipode is an involution)."""
    return _apply_antipode(normal_m, n)


class CobordClass:
    """Homogeneous rational cobordism class of real dimension 2*dim."""

    __slots__ = ("dim", "normal_m")

    def __init__(self, dim, normal_m=None):
        self.dim = dim
        clean = {}
        for lam, c in (normal_m or {}).items():
            lam = Partition(lam)
            if lam.weight != dim:
                raise ValueError(f"partition {lam} does not have weight {dim}")
            if c:
                clean[lam] = Fraction(c)
        self.normal_m = clean

    @classmethod
    def point(cls, multiple=1):
        return cls(0, {EMPTY: multiple})

    @classmethod
    def from_tangent(cls, dim, tangent_m):
        return cls(dim, normal_from_tangent(tangent_m, dim))

    @property
    def tangent_m(self):
        return tangent_from_normal(self.normal_m, self.dim)

    def number(self, lam):
        return self.normal_m.get(Partition(lam), Fraction(0))

    def __bool__(self):
        return bool(self.normal_m)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if self.dim != other.dim:
            raise ValueError(f"cannot add classes of dims {self.dim} and {other.dim}")
        out = dict(self.normal_m)
        for k, v in other.normal_m.items():
            out[k] = out.get(k, 0) + v
        return CobordClass(self.dim, out)

    __radd__ = __add__

    def __neg__(self):
        return CobordClass(self.dim, {k: -v for k, v in self.normal_m.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CobordClass(self.dim, {k: v * other for k, v in self.normal_m.items()})
        if isinstance(other, CobordClass):
            return product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, CobordClass):
            return NotImplemented
        return self.dim == other.dim and self.normal_m == other.normal_m

    def __hash__(self):
        return hash((self.dim, frozenset(self.normal_m.items())))

    def __repr__(self):
        return f"CobordClass({self.dim}, {format_numbers(self.normal_m)})"


def format_numbers(numbers):
    items = sorted(numbers.items(), key=lambda kv: partition_key(kv[0]))
    return "{" + ", ".join(f"{list(k)}: {v}" for k, v in items) + "}"


def product(a, b):
    """Cartesian product: m_lam(A x B) = sum over splittings mu u nu = lam."""
    n = a.dim + b.dim
    out = {}
    for lam in partitions_of(n):
        total = Fraction(0)
        for mu, nu in splittings(lam):
            if mu.weight == a.dim and nu.weight == b.dim:
                total += a.number(mu) * b.number(nu)
        if total:
            out[lam] = total
    return CobordClass(n, out)


@cache
def cp(n):
    """The class of CP^n; tangent roots are n+1 copies of the hyperplane class."""
    if n < 0:
        raise ValueError("n must be non-negative")
    tangent = {lam: monomial_count(lam, n + 1) for lam in partitions_of(n)}
    return CobordClass.from_tangent(n, tangent)


def cp_product(dims):
    return reduce(product, (cp(d) for d in dims), CobordClass.point())


def n_class(n):
    """N^{2n}: m_(n) = (n+1)! and every other normal number zero."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return CobordClass(n, {(n,): factorial(n + 1)})


@cache
def _cp_basis_inverse(n):
    parts = partitions_of(n)
    rows = [[cp_product(lam).number(mu) for mu in parts] for lam in parts]
    return tuple(map(tuple, matinv(rows)))


def cp_coordinates(cls):
    """Coefficients a_lam with cls = sum_lam a_lam * prod_i CP^{lam_i}."""
    parts = partitions_of(cls.dim)
    inv = _cp_basis_inverse(cls.dim)
    vec = [cls.number(mu) for mu in parts]
    out = {}
    for j, lam in enumerate(parts):
        c = sum((vec[i] * inv[i][j] for i in range(len(parts))), Fraction(0))
        if c:
            out[lam] = c
    return out


class GradedClass:
    """Inhomogeneous element of Omega^U_* (x) Q: dim -> CobordClass."""

    __slots__ = ("components",)

    def __init__(self, components=None):
        if isinstance(components, CobordClass):
            components = [components]
        if isinstance(components, dict):
            components = components.values()
        clean = {}
        for c in components or ():
            if c.dim in clean:
                clean[c.dim] = clean[c.dim] + c
            else:
                clean[c.dim] = c
        self.components = {d: c for d, c in clean.items() if c}

    @classmethod
    def scalar(cls, c):
        return cls(CobordClass.point(c))

    def one(self):
        return GradedClass.scalar(1)

    def inverse_unit(self):
        if set(self.components) != {0}:
            raise ValueError(f"not an invertible scalar: {self}")
        return GradedClass.scalar(1 / self.components[0].number(EMPTY))

    def component(self, d):
        return self.components.get(d, CobordClass(d))

    @property
    def dims(self):
        return sorted(self.components)

    def _coerce(self, other):
        if isinstance(other, GradedClass):
            return other
        if isinstance(other, CobordClass):
            return GradedClass(other)
        if isinstance(other, (int, Fraction)):
            return GradedClass.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GradedClass(list(self.components.values()) + list(other.components.values()))

    __radd__ = __add__

    def __neg__(self):
        return GradedClass([-c for c in self.components.values()])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GradedClass([c * other for c in self.components.values()])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return GradedClass([product(a, b) for a in self.components.values()
                            for b in other.components.values()])

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.components == other.components

    def __hash__(self):
        return hash(frozenset(self.components.items()))

    def __bool__(self):
        return bool(self.components)

    def __repr__(self):
        return format_class(self)


def format_class(cls):
    """Human-readable form in the basis of products of projective spaces."""
    if isinstance(cls, CobordClass):
        cls = GradedClass(cls)
    terms = []
    for d in cls.dims:
        for lam, c in sorted(cp_coordinates(cls.components[d]).items(),
                             key=lambda kv: partition_key(kv[0])):
            name = "*".join(f"CP({k})" for k in lam) or "pt"
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append("-" + name)
            else:
                terms.append(f"{c}*{name}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _as_components(M):
    if isinstance(M, GradedClass):
        return list(M.components.values())
    return [M]


def genus(M, s):
    """sum_lam coeff_profile(s, lam) m_lam(M); s is the NORMAL series.

    For a GradedClass the genus is summed over components.
    """
    total = 0
    for comp in _as_components(M):
        if comp.dim > s.order:
            raise ValueError(f"series order {s.order} below dimension {comp.dim}")
        for lam, c in comp.normal_m.items():
            total = total + coeff_profile(s, lam) * c
    return total


def todd(M):
    return genus(M, pseries.todd_reciprocal(_top(M)))


def signature(M):
    return genus(M, pseries.signature_normal(_top(M)))


def chi_y(M):
    return genus(M, pseries.chi_y_normal(_top(M)))


def ahat(M):
    return genus(M, pseries.ahat_normal(_top(M)))


def euler(M):
    return genus(M, pseries.euler_normal(_top(M)))


def _top(M):
    return max((c.dim for c in _as_components(M)), default=0)


def s_star_y(M):
    """Universal symmetric genus sum_lam h_lam(y) m_lam(M), as a y-only BigradedElement."""
    out = {}
    for comp in _as_components(M):
        for lam, c in comp.normal_m.items():
            out[(lam, EMPTY)] = out.get((lam, EMPTY), 0) + c
    return BigradedElement(out)


def mishchenko_log(order):
    """mog(u) = sum_{n>=0} [CP^n] u^{n+1}/(n+1)."""
    coeffs = [GradedClass()] + [GradedClass(cp(k - 1)) * Fraction(1, k)
                                for k in range(1, order + 1)]
    return TruncSeries(coeffs, order)


@cache
def fgl_inverse(order):
    """iota(u) = mog^{-1}(-mog(u)): the cobordism Chern class of a conjugate line bundle."""
    mog = mishchenko_log(order)
    return mog.comp_inverse().compose(-mog)
