"""Truncated univariate power series over an exact commutative ring.

Coefficients may be ``int``/``Fraction`` or any object implementing
``+``, ``-``, ``*`` (including by rationals), ``==`` and the two
methods ``one()`` and ``inverse_unit()``.  The rings used in this
package are Q, Q[y] (:class:`Poly`), Lambda[y] (x) Lambda[z] (x) Q
(:class:`~chernsub.symfunc.BigradedElement`), rational cobordism
(:class:`~chernsub.cobord.GradedClass`) and truncated cohomology rings
(:class:`~chernsub.geommodel.CohoPoly`).
"""

from fractions import Fraction
from functools import reduce
from math import factorial
import operator

from .symfunc import BigradedElement, Partition


def _is_scalar(c):
    return isinstance(c, (int, Fraction))


def one_like(c):
    return Fraction(1) if _is_scalar(c) else c.one()


def unit_inverse(c):
    if _is_scalar(c):
        if c == 0:
            raise ZeroDivisionError("constant term 0 is not invertible")
        return 1 / Fraction(c)
    return c.inverse_unit()


def _is_zero(c):
    return c == 0 if _is_scalar(c) else c == c * 0


class Poly:
    """Univariate polynomial with rational coefficients, e.g. Q[y]."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="y"):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.var = var

    @classmethod
    def gen(cls, var="y"):
        return cls([0, 1], var)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def one(self):
        return Poly([1], self.var)

    def inverse_unit(self):
        if self.degree != 0:
            raise ValueError(f"not a unit in Q[{self.var}]: {self}")
        return Poly([1 / self.coeffs[0]], self.var)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if _is_scalar(other):
            return Poly([other], self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly([], self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k):
        return reduce(operator.mul, [self] * k, self.one())

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def divexact(self, other):
        """Quotient by ``other``; raises if the division leaves a remainder."""
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(len(rem) - other.degree, 0)
        lead = other.coeffs[-1]
        for i in range(len(q) - 1, -1, -1):
            c = rem[i + other.degree] / lead
            q[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= c * b
        if any(rem):
            raise ValueError(f"{other} does not divide {self}")
        return Poly(q, self.var)

    def __call__(self, value):
        out = 0
        for c in reversed(self.coeffs):
            out = out * value + c
        return out

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else self.var if k == 1 else f"{self.var}^{k}"
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


class TruncSeries:
    """Power series sum_{k<=order} c_k x^k with exact coefficients.

    Arithmetic between series of different orders truncates to the
    smaller order.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        coeffs = list(coeffs)
        if not coeffs:
            coeffs = [Fraction(0)]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        coeffs = [Fraction(c) if isinstance(c, int) else c for c in coeffs[:order + 1]]
        zero = coeffs[0] * 0
        coeffs += [zero] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def variable(cls, order, coeff=Fraction(1)):
        """The series ``coeff * x``."""
        return cls([coeff * 0, coeff], order)

    @classmethod
    def constant(cls, c, order):
        return cls([c], order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order):
        return TruncSeries(self.coeffs, min(order, self.order))

    def map(self, fn):
        return TruncSeries([fn(c) for c in self.coeffs], self.order)

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            return other
        return TruncSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncSeries([a + b for a, b in zip(self.coeffs[:n + 1], other.coeffs)], n)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries([c * other for c in self.coeffs], self.order)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncSeries(
            [reduce(operator.add, (a[i] * b[k - i] for i in range(k + 1))) for k in range(n + 1)],
            n)

    def __rmul__(self, other):
        return TruncSeries([other * c for c in self.coeffs], self.order)

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = TruncSeries.constant(one_like(self.coeffs[0]), self.order)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            other = self._coerce(other)
        n = min(self.order, other.order)
        return all(a == b for a, b in zip(self.coeffs[:n + 1], other.coeffs[:n + 1]))

    def __repr__(self):
        return f"TruncSeries({list(self.coeffs)!r}, order={self.order})"

    def shift_down(self):
        """Divide by x; the constant term must vanish.  Loses one order."""
        if not _is_zero(self.coeffs[0]):
            raise ValueError(f"cannot divide by x: constant term {self.coeffs[0]}")
        if self.order == 0:
            raise ValueError("cannot divide an order-0 series by x")
        return TruncSeries(self.coeffs[1:], self.order - 1)

    def shift_up(self, k=1):
        """Multiply by x^k, keeping the order."""
        zero = self.coeffs[0] * 0
        return TruncSeries([zero] * k + list(self.coeffs), self.order)

    def inverse(self):
        """Multiplicative inverse; the constant term must be a unit."""
        try:
            b0 = unit_inverse(self.coeffs[0])
        except (ZeroDivisionError, ValueError) as exc:
            raise ValueError(f"constant term {self.coeffs[0]!r} is not invertible") from exc
        a = self.coeffs
        b = [b0]
        for k in range(1, self.order + 1):
            acc = reduce(operator.add, (a[i] * b[k - i] for i in range(1, k + 1)))
            b.append(-(b0 * acc))
        return TruncSeries(b, self.order)

    def __truediv__(self, other):
        if isinstance(other, TruncSeries):
            return self * other.inverse()
        return self * (1 / Fraction(other))

    def compose(self, inner):
        """self(inner(x)); inner must have zero constant term."""
        if not _is_zero(inner.coeffs[0]):
            raise ValueError(f"inner series has nonzero constant term {inner.coeffs[0]!r}")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        out = TruncSeries.constant(self.coeffs[n], n)
        for k in range(n - 1, -1, -1):
            out = out * inner + self.coeffs[k]
        return out

    def __call__(self, inner):
        return self.compose(inner)

    def comp_inverse(self):
        """Series g with self(g(x)) = x; needs zero constant and a unit linear term."""
        if not _is_zero(self.coeffs[0]):
            raise ValueError(f"constant term {self.coeffs[0]!r} is not zero")
        if self.order < 1:
            raise ValueError("order must be at least 1")
        try:
            inv1 = unit_inverse(self.coeffs[1])
        except (ZeroDivisionError, ValueError) as exc:
            raise ValueError(f"linear term {self.coeffs[1]!r} is not invertible") from exc
        zero = self.coeffs[0] * 0
        g = [zero, inv1] + [zero] * (self.order - 1)
        for k in range(2, self.order + 1):
            # with g_k = 0, the x^k coefficient of self(g) is the defect to cancel
            defect = self.compose(TruncSeries(g, self.order))[k]
            g[k] = -(inv1 * defect)
        return TruncSeries(g, self.order)

    def derivative(self):
        if self.order == 0:
            return TruncSeries([self.coeffs[0] * 0], 0)
        return TruncSeries([k * self.coeffs[k] for k in range(1, self.order + 1)], self.order - 1)

    def integral(self):
        """Antiderivative with zero constant term; gains one order."""
        zero = self.coeffs[0] * 0
        return TruncSeries([zero] + [c * Fraction(1, k + 1) for k, c in enumerate(self.coeffs)],
                           self.order + 1)

    def exp(self):
        """exp of a series with zero constant term, via E' = a' E."""
        if not _is_zero(self.coeffs[0]):
            raise ValueError(f"exp needs zero constant term, got {self.coeffs[0]!r}")
        a = self.coeffs
        out = [one_like(a[0])]
        for n in range(1, self.order + 1):
            acc = reduce(operator.add, ((k * a[k]) * out[n - k] for k in range(1, n + 1)))
            out.append(acc * Fraction(1, n))
        return TruncSeries(out, self.order)

    def log(self):
        """log of a series with constant term 1."""
        if self.coeffs[0] != one_like(self.coeffs[0]):
            raise ValueError(f"log needs constant term 1, got {self.coeffs[0]!r}")
        if self.order == 0:
            return TruncSeries([self.coeffs[0] * 0], 0)
        return (self.derivative() * self.inverse().truncate(self.order - 1)).integral()


def coeff_profile(s, lam):
    """prod_j s[lam_j]: the coefficient of m_lam in prod_i s(x_i) when s(0) = 1."""
    lam = Partition(lam)
    if lam.weight > s.order:
        raise ValueError(f"|{lam}| exceeds series order {s.order}")
    return reduce(operator.mul, (s[a] for a in lam), one_like(s[0]))


# -- named series -------------------------------------------------------------------

def exp_linear(c, order):
    """e^{c x}, expanded from factorials; c may be any ring element."""
    one = one_like(c)
    return TruncSeries([one * Fraction(1, factorial(k)) * _power(c, k) for k in range(order + 1)],
                       order)


def _power(c, k):
    return reduce(operator.mul, [c] * k, one_like(c))


def one_minus_exp_neg(order):
    """1 - e^{-x}."""
    return 1 - exp_linear(Fraction(-1), order)


def todd_reciprocal(order):
    """(1 - e^{-x})/x, the normal characteristic series of the Todd genus."""
    return one_minus_exp_neg(order + 1).shift_down()


def todd_series(order):
    """x/(1 - e^{-x})."""
    return todd_reciprocal(order).inverse()


def chi_y_Q(order):
    """Q(x) = x (1 + y e^{-x(1+y)}) / (1 - e^{-x(1+y)}) over Q[y].

    (1 - e^{-x(1+y)})/x = (1+y) D(x) with D(0) = 1, so Q = N D^{-1} / (1+y)
    and the last division is exact in Q[y].
    """
    y = Poly.gen("y")
    s = 1 + y
    e = exp_linear(-s, order + 1)
    numer = (1 + e * y).truncate(order)
    d_unit = (1 - e).shift_down().map(lambda c: c.divexact(s))
    return (numer * d_unit.inverse()).map(lambda c: c.divexact(s))


def chi_y_normal(order):
    """1/Q(x), the normal series whose genus is chi_y."""
    return chi_y_Q(order).inverse()


def signature_normal(order):
    """tanh(x)/x."""
    ep, em = exp_linear(Fraction(1), order + 1), exp_linear(Fraction(-1), order + 1)
    sinh_over_x = ((ep - em) * Fraction(1, 2)).shift_down()
    cosh = ((ep + em) * Fraction(1, 2)).truncate(order)
    return sinh_over_x * cosh.inverse()


def signature_tangent(order):
    """x/tanh(x)."""
    return signature_normal(order).inverse()


def ahat_normal(order, scale=Fraction(1)):
    """sinh(scale*x/2)/(scale*x/2); the inverse of the A-hat series at scale*x."""
    half = Fraction(scale) / 2
    ep, em = exp_linear(half, order + 1), exp_linear(-half, order + 1)
    return ((ep - em) * Fraction(1, 2)).shift_down() * (1 / half)


def ahat_tangent(order):
    """(x/2)/sinh(x/2)."""
    return ahat_normal(order).inverse()


def ahat_scaled_normal(order):
    """(e^{2x} - e^{-2x})/(4x) = 1/A-hat(4x)."""
    ep, em = exp_linear(Fraction(2), order + 1), exp_linear(Fraction(-2), order + 1)
    return (ep - em).shift_down() * Fraction(1, 4)


def euler_tangent(order):
    return TruncSeries([1, 1], order)


def euler_normal(order):
    return euler_tangent(order).inverse()


# -- series over Lambda[y] (x) Lambda[z] (x) Q --------------------------------

def t2_series(order):
    """T_2(x) = prod_j (1 - y_j x)^{-1} = sum_a h_a(y) x^a."""
    return TruncSeries([BigradedElement.hy(*([a] if a else [])) for a in range(order + 1)], order)


def h_z_series(order):
    """sum_m h_m(z) w^m = prod_k (1 - z_k w)^{-1} as a series in w."""
    return TruncSeries([BigradedElement.hz(*([a] if a else [])) for a in range(order + 1)], order)


def t1_series(order):
    """T_1(x) = prod_k (1 - z_k x T_2(x))^{-1}."""
    w = t2_series(order).shift_up(1)
    return h_z_series(order).compose(w)


def t_tau_series(order):
    """Per-root Todd class of the transformation: T_1(x) T_2(x)."""
    return t1_series(order) * t2_series(order)


def ta_series(order):
    """T_1 evaluated at 1 - e^{-x}."""
    return t1_series(order).compose(one_minus_exp_neg(order))


def tb_series(order):
    """((1 - e^{-x})/x) T_2(1 - e^{-x})."""
    return todd_reciprocal(order) * t2_series(order).compose(one_minus_exp_neg(order))
