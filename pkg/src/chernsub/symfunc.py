"""Symmetric functions over exact rationals.

Partitions, the four classical bases (m, h, e, p), transition matrices
between them, the Hopf antipode, specializations of the complete
symmetric functions and elements of Lambda[y] (x) Lambda[z] (x) Q kept
in the multiplicative h (x) h basis.

The ring of symmetric functions is treated in infinitely many variables,
i.e. as the free polynomial ring on h_1, h_2, ...  Transition matrices
are computed degree by degree by expanding in max(6, n) variables, which
is faithful in degree n.
"""

from collections import Counter
from fractions import Fraction
from functools import cache, reduce
from itertools import combinations_with_replacement
from math import factorial, prod
import operator

BASES = ("m", "h", "e", "p")
MULTIPLICATIVE = ("h", "e", "p")


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self):
        return sum(self)

    def union(self, other):
        return Partition(self + tuple(other))

    def multiplicities(self):
        return Counter(self)

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")"


EMPTY = Partition()


def _partitions_desc(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_desc(n - first, first):
            yield (first,) + rest


@cache
def _partitions_tuple(n):
    return tuple(Partition(p) for p in _partitions_desc(n, n))


def partitions_of(n):
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> partitions_of(3)
    [(3), (2,1), (1,1,1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_tuple(n))


def partitions_upto(n):
    """Partitions of every weight 0..n, ordered by weight then reverse-lex."""
    return [lam for d in range(n + 1) for lam in _partitions_tuple(d)]


def partition_key(lam):
    """Sort key realizing the canonical order: weight, then reverse-lex."""
    return (sum(lam), tuple(-p for p in lam))


def splittings(lam):
    """Distinct pairs (mu, nu) of partitions with mu union nu == lam."""
    mult = sorted(Counter(lam).items(), reverse=True)
    out = [((), ())]
    for part, k in mult:
        out = [(a + (part,) * j, b + (part,) * (k - j))
               for a, b in out for j in range(k + 1)]
    return [(Partition(a), Partition(b)) for a, b in out]


def monomial_count(lam, k):
    """m_lam evaluated at k variables all equal to 1.

    This is the number of distinct rearrangements of lam padded with
    zeros to length k.
    """
    lam = Partition(lam)
    if len(lam) > k:
        return 0
    mult = lam.multiplicities()
    mult[0] = k - len(lam)
    return factorial(k) // prod(factorial(c) for c in mult.values())


# -- polynomial expansion in finitely many variables -------------------------

def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return out


def _generator_poly(basis, a, k):
    """The basis element of degree a, as a polynomial in k variables."""
    out = {}
    if basis == "p":
        for i in range(k):
            e = [0] * k
            e[i] = a
            out[tuple(e)] = 1
    elif basis == "h":
        for idx in combinations_with_replacement(range(k), a):
            e = [0] * k
            for i in idx:
                e[i] += 1
            out[tuple(e)] = 1
    elif basis == "e":
        if a > k:
            return {}
        for idx in combinations_with_replacement(range(k), a):
            if len(set(idx)) < a:
                continue
            e = [0] * k
            for i in idx:
                e[i] = 1
            out[tuple(e)] = 1
    else:
        raise ValueError(f"unknown basis {basis!r}")
    return out


@cache
def _to_monomial(basis, n):
    """Rows: basis element f_lam; columns: coefficient of m_mu."""
    parts = _partitions_tuple(n)
    k = max(6, n)
    rows = []
    for lam in parts:
        poly = {(0,) * k: 1}
        for a in lam:
            poly = _poly_mul(poly, _generator_poly(basis, a, k))
        rows.append([Fraction(poly.get(tuple(mu) + (0,) * (k - len(mu)), 0))
                     for mu in parts])
    return tuple(map(tuple, rows))


def identity_matrix(size):
    return [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]


def matmul(a, b):
    if not a:
        return []
    cols = range(len(b[0]))
    return [[sum((row[k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in cols]
            for row in a]


def matinv(a):
    """Exact Gauss-Jordan inverse of a square matrix of rationals."""
    size = len(a)
    aug = [list(map(Fraction, row)) + ident for row, ident in zip(a, identity_matrix(size))]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[size:] for row in aug]


@cache
def _transition(a, b, n):
    if a not in BASES or b not in BASES:
        raise ValueError(f"unknown basis pair {a!r}, {b!r}")
    size = len(_partitions_tuple(n))
    if a == b:
        mat = identity_matrix(size)
    elif b == "m":
        mat = [list(r) for r in _to_monomial(a, n)]
    elif a == "m":
        mat = matinv(_to_monomial(b, n))
    else:
        mat = matmul(_transition(a, "m", n), _transition("m", b, n))
    return tuple(map(tuple, mat))


def transition(a, b, n):
    """Matrix M with a_lam = sum_mu M[lam][mu] b_mu over partitions of n.

    Rows and columns follow the order of ``partitions_of(n)``.
    """
    return [list(r) for r in _transition(a, b, n)]


@cache
def _antipode_matrix(basis, n):
    # S(h_lam) = (-1)^n e_lam, expressed back in the h basis, then conjugated
    sign = -1 if n % 2 else 1
    s_h = [[sign * x for x in row] for row in _transition("e", "h", n)]
    if basis == "h":
        return tuple(map(tuple, s_h))
    mat = matmul(matmul(_transition(basis, "h", n), s_h), _transition("h", basis, n))
    return tuple(map(tuple, mat))


def antipode_matrix(basis, n):
    """Matrix of the antipode on the degree-n part of ``basis``."""
    return [list(r) for r in _antipode_matrix(basis, n)]


class SymFn:
    """A (possibly inhomogeneous) symmetric function in one of the bases.

    ``coeffs`` maps Partition -> Fraction; zero coefficients are dropped.
    """

    __slots__ = ("basis", "coeffs")

    def __init__(self, basis, coeffs=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for lam, c in (coeffs or {}).items():
            if c:
                lam = Partition(lam)
                clean[lam] = clean.get(lam, 0) + Fraction(c)
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def basis_element(cls, basis, lam, coeff=1):
        return cls(basis, {Partition(lam): coeff})

    @property
    def degree(self):
        """Largest weight carrying a nonzero coefficient (-1 for zero)."""
        return max((lam.weight for lam in self.coeffs), default=-1)

    def homogeneous(self, n):
        return SymFn(self.basis, {k: v for k, v in self.coeffs.items() if k.weight == n})

    def to(self, basis):
        if basis == self.basis:
            return self
        out = {}
        for n in {lam.weight for lam in self.coeffs}:
            parts = _partitions_tuple(n)
            mat = _transition(self.basis, basis, n)
            for i, lam in enumerate(parts):
                c = self.coeffs.get(lam)
                if not c:
                    continue
                for j, mu in enumerate(parts):
                    if mat[i][j]:
                        out[mu] = out.get(mu, 0) + c * mat[i][j]
        return SymFn(basis, out)

    def antipode(self):
        out = {}
        for n in {lam.weight for lam in self.coeffs}:
            parts = _partitions_tuple(n)
            mat = _antipode_matrix(self.basis, n)
            for i, lam in enumerate(parts):
                c = self.coeffs.get(lam)
                if not c:
                    continue
                for j, mu in enumerate(parts):
                    if mat[i][j]:
                        out[mu] = out.get(mu, 0) + c * mat[i][j]
        return SymFn(self.basis, out)

    def __add__(self, other):
        if not isinstance(other, SymFn):
            other = SymFn(self.basis, {EMPTY: other})
        other = other.to(self.basis)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return SymFn(self.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return SymFn(self.basis, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFn(self.basis, {k: v * other for k, v in self.coeffs.items()})
        work = self.basis if self.basis in MULTIPLICATIVE else "h"
        a, b = self.to(work), other.to(work)
        out = {}
        for la, ca in a.coeffs.items():
            for lb, cb in b.coeffs.items():
                lam = la.union(lb)
                out[lam] = out.get(lam, 0) + ca * cb
        return SymFn(work, out).to(self.basis)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SymFn(self.basis, {EMPTY: other})
        if not isinstance(other, SymFn):
            return NotImplemented
        return self.coeffs == other.to(self.basis).coeffs

    def __hash__(self):
        return hash(frozenset(self.to("h").coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = sorted(self.coeffs.items(), key=lambda kv: partition_key(kv[0]))
        return " + ".join(f"{c}*{self.basis}{list(lam)}" for lam, c in terms)


def m(*parts):
    return SymFn.basis_element("m", parts)


def h(*parts):
    return SymFn.basis_element("h", parts)


def e(*parts):
    return SymFn.basis_element("e", parts)


def p(*parts):
    return SymFn.basis_element("p", parts)


# -- specializations -----------------------------------------------------------

def h_values_of_variables(values, degree):
    """Coefficients h_1..h_degree of prod_i (1 - v_i t)^{-1}.

    ``values`` may be rationals or any ring elements supporting + and *.
    Uses h_a(v_1..v_r) = h_a(v_1..v_{r-1}) + v_r h_{a-1}(v_1..v_r).
    """
    hs = [1] + [0] * degree
    for v in values:
        for a in range(1, degree + 1):
            hs[a] = hs[a] + v * hs[a - 1]
    return hs[1:]


def _h_value(values, a):
    if a == 0:
        return 1
    if hasattr(values, "coeffs") and not isinstance(values, (list, tuple)):
        # a truncated series: h_a -> coefficient of x^a
        if a > values.order:
            raise ValueError(f"series of order {values.order} cannot supply h_{a}")
        return values[a]
    if a > len(values):
        raise ValueError(f"only {len(values)} values given, h_{a} requested")
    return values[a - 1]


def _h_monomial_value(lam, values):
    return reduce(operator.mul, (_h_value(values, a) for a in lam), 1)


def specialize_h(f, values):
    """Apply the ring map h_a -> values[a-1] (or the a-th series coefficient)."""
    f = f.to("h")
    return sum((c * _h_monomial_value(lam, values) for lam, c in f.coeffs.items()), 0)


# -- Lambda[y] (x) Lambda[z] (x) Q -------------------------------------------

def _is_scalar(x):
    return isinstance(x, (int, Fraction))


class BigradedElement:
    """Finite sum of c * h_{lam_y}(y) h_{lam_z}(z) with rational c."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for (ly, lz), c in (coeffs or {}).items():
            if c:
                key = (Partition(ly), Partition(lz))
                clean[key] = clean.get(key, 0) + Fraction(c)
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def scalar(cls, c):
        return cls({(EMPTY, EMPTY): c})

    @classmethod
    def hy(cls, *parts, coeff=1):
        return cls({(Partition(parts), EMPTY): coeff})

    @classmethod
    def hz(cls, *parts, coeff=1):
        return cls({(EMPTY, Partition(parts)): coeff})

    @classmethod
    def from_symfn(cls, f, slot="y"):
        f = f.to("h")
        if slot == "y":
            return cls({(lam, EMPTY): c for lam, c in f.coeffs.items()})
        return cls({(EMPTY, lam): c for lam, c in f.coeffs.items()})

    def one(self):
        return BigradedElement.scalar(1)

    def zero(self):
        return BigradedElement()

    def inverse_unit(self):
        if set(self.coeffs) != {(EMPTY, EMPTY)}:
            raise ValueError(f"not an invertible scalar: {self}")
        return BigradedElement.scalar(1 / self.coeffs[(EMPTY, EMPTY)])

    def _coerce(self, other):
        if isinstance(other, BigradedElement):
            return other
        if _is_scalar(other):
            return BigradedElement.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return BigradedElement(out)

    __radd__ = __add__

    def __neg__(self):
        return BigradedElement({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return BigradedElement({k: v * other for k, v in self.coeffs.items()})
        if not isinstance(other, BigradedElement):
            return NotImplemented
        out = {}
        for (ay, az), ca in self.coeffs.items():
            for (by, bz), cb in other.coeffs.items():
                key = (ay.union(by), az.union(bz))
                out[key] = out.get(key, 0) + ca * cb
        return BigradedElement(out)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def bidegrees(self):
        return sorted({(ly.weight, lz.weight) for ly, lz in self.coeffs})

    def homogeneous(self, d):
        """Component of total (y, z)-degree d."""
        return BigradedElement({k: v for k, v in self.coeffs.items()
                                if k[0].weight + k[1].weight == d})

    def is_homogeneous(self, d):
        return all(ly.weight + lz.weight == d for ly, lz in self.coeffs)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs.values())

    def integer_part(self):
        """Coefficientwise truncation toward zero."""
        return BigradedElement({k: int(v) for k, v in self.coeffs.items()})

    def specialize(self, y_values, z_values):
        """Ring map h_a(y) -> y_values[a], h_a(z) -> z_values[a] (see specialize_h)."""
        return sum((c * _h_monomial_value(ly, y_values) * _h_monomial_value(lz, z_values)
                    for (ly, lz), c in self.coeffs.items()), 0)

    def sorted_terms(self):
        return sorted(self.coeffs.items(),
                      key=lambda kv: (partition_key(kv[0][0]), partition_key(kv[0][1])))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        out = []
        for (ly, lz), c in self.sorted_terms():
            factors = []
            if ly:
                factors.append(f"hy{list(ly)}")
            if lz:
                factors.append(f"hz{list(lz)}")
            if not factors:
                out.append(str(c))
            elif c == 1:
                out.append("*".join(factors))
            else:
                out.append(f"{c}*" + "*".join(factors))
        return " + ".join(out).replace("+ -", "- ")


# -- the Cauchy identity --------------------------------------------------------

def _bounded_compositions(total, bounds):
    if not bounds:
        if total == 0:
            yield ()
        return
    for a in range(min(total, bounds[0]) + 1):
        for rest in _bounded_compositions(total - a, bounds[1:]):
            yield (a,) + rest


@cache
def _count_matrices(rows, cols):
    """Number of N-valued matrices with the given row and column sums."""
    if not rows:
        return int(not any(cols))
    return sum(_count_matrices(rows[1:], tuple(c - a for c, a in zip(cols, row)))
               for row in _bounded_compositions(rows[0], cols))


def cauchy_product_form(N):
    """prod_{i,j}(1 - z_i y_j)^{-1} expanded in N variables of each kind.

    Expanding each factor as sum_a (z_i y_j)^a, the coefficient of
    z^alpha y^beta counts matrices with row sums alpha and column sums
    beta.  Dominant monomials give the m(z) m(y) coordinates, and the
    z-slot is then converted to the h basis.  Returns a mapping
    (lam_z, mu_y) -> coefficient of h_lam(z) m_mu(y).
    """
    out = {}
    for d in range(N + 1):
        parts = [lam for lam in _partitions_tuple(d) if len(lam) <= N]
        mm = {(a, b): _count_matrices(tuple(a), tuple(b)) for a in parts for b in parts}
        _merge_slot_conversion(out, mm, d, "m", "m")
    return out


def cauchy_exponential_form(N):
    """exp(sum_k p_k(z) p_k(y) / k) computed in the p (x) p basis to degree N."""
    # elements: dict (lam_z, lam_y) -> coeff in p(z) p(y); product is union
    x = {(Partition((k,)), Partition((k,))): Fraction(1, k) for k in range(1, N + 1)}

    def mul(a, b):
        out = {}
        for (az, ay), ca in a.items():
            for (bz, by), cb in b.items():
                if az.weight + bz.weight > N:
                    continue
                key = (az.union(bz), ay.union(by))
                out[key] = out.get(key, 0) + ca * cb
        return out

    total = {(EMPTY, EMPTY): Fraction(1)}
    power = {(EMPTY, EMPTY): Fraction(1)}
    for j in range(1, N + 1):
        power = mul(power, x)
        for k, v in power.items():
            total[k] = total.get(k, 0) + v / factorial(j)
    out = {}
    for d in range(N + 1):
        block = {k: v for k, v in total.items() if k[0].weight == d}
        _merge_slot_conversion(out, block, d, "p", "p")
    return out


def cauchy_sum_form(N):
    """1 + sum_{|lam|>0} h_lam(z) m_lam(y) up to degree N."""
    return {(lam, lam): Fraction(1) for lam in partitions_upto(N)}


def _merge_slot_conversion(out, block, d, zbasis, ybasis):
    """Convert a degree-d block from zbasis(z) ybasis(y) to h(z) m(y) and add."""
    parts = _partitions_tuple(d)
    tz = _transition(zbasis, "h", d)
    ty = _transition(ybasis, "m", d)
    index = {lam: i for i, lam in enumerate(parts)}
    for (lz, ly), c in block.items():
        if not c:
            continue
        i, k = index[lz], index[ly]
        for j, mu in enumerate(parts):
            if not tz[i][j]:
                continue
            for l, nu in enumerate(parts):
                if ty[k][l]:
                    key = (mu, nu)
                    out[key] = out.get(key, 0) + c * tz[i][j] * ty[k][l]
    for key in [k for k, v in out.items() if not v]:
        del out[key]


def cauchy_check(N):
    """True iff the product, exponential and sum forms agree up to degree N."""
    if N < 1:
        raise ValueError("N must be at least 1")
    prod_form = cauchy_product_form(N)
    exp_form = cauchy_exponential_form(N)
    sum_form = cauchy_sum_form(N)
    return prod_form == exp_form == sum_form
