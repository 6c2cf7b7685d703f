"""
Exact scalar, polynomial and power-series arithmetic.

Everything is built on ``fractions.Fraction``. Three value types carry all
computation in the app:

- ``Poly``: dense univariate polynomial, coefficient of x**i at index i.
- ``FactPoly``: the same polynomial written in the falling-factorial basis
  (y)_k = y(y-1)...(y-k+1).
- ``TruncSeries``: power series in t truncated at a fixed order whose
  coefficients are ``Poly`` objects in x. Slot n holds the coefficient of
  t**n / n! (exponential generating function convention).

All three are immutable once built and every operation returns a new value.
"""

import json
import logging
import math
from fractions import Fraction
from typing import Iterable, Sequence

logger = logging.getLogger(__name__)

Rational = Fraction

# Degree of the zero polynomial. Compares below every integer degree.
NEG_INFINITY = -math.inf


class InternalInconsistency(RuntimeError):
    """
    A result contradicted an identity that holds for every valid input.
    Raised for bugs, never for bad user input (that is a ValueError).
    """


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"Not a rational number: {value!r}") from exc
    if isinstance(value, float):
        raise ValueError(f"Floats are not exact, pass a string instead: {value!r}")
    return Fraction(value)


class Poly:
    """
    Dense polynomial over the rationals.

    ``coeffs[i]`` is the coefficient of x**i. Trailing zeros are stripped on
    construction so the zero polynomial is the empty tuple.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Iterable = ()):
        values = [to_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs = tuple(values)

    @classmethod
    def constant(cls, value) -> 'Poly':
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> 'Poly':
        if degree < 0:
            raise ValueError(f"Negative monomial degree: {degree}")
        return cls([0] * degree + [coeff])

    @classmethod
    def x(cls) -> 'Poly':
        return cls([0, 1])

    @property
    def degree(self):
        """Integer degree, or NEG_INFINITY for the zero polynomial."""
        if not self.coeffs:
            return NEG_INFINITY
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; refuses anything of degree >= 1."""
        if len(self.coeffs) > 1:
            raise ValueError(f"Expected a constant polynomial, got degree {self.degree}")
        return self.coeff(0)

    def __call__(self, x0) -> Fraction:
        x0 = to_rational(x0)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return '0'
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return ' + '.join(terms)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_add(other, -self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return poly_pow(self, k)


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Poly.constant(value)
    return NotImplemented


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def poly_add(p: Poly, q: Poly) -> Poly:
    """Coefficient-wise sum, normalized."""
    if len(p.coeffs) < len(q.coeffs):
        p, q = q, p
    out = list(p.coeffs)
    for i, c in enumerate(q.coeffs):
        out[i] += c
    return Poly(out)


def poly_scale(p: Poly, c) -> Poly:
    c = to_rational(c)
    if c == 0:
        return ZERO
    return Poly(c * v for v in p.coeffs)


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Schoolbook convolution product."""
    if p.is_zero or q.is_zero:
        return ZERO
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return Poly(out)


def poly_pow(p: Poly, k: int) -> Poly:
    if k < 0:
        raise ValueError(f"Negative polynomial power: {k}")
    result = ONE
    base = p
    while k:
        if k & 1:
            result = poly_mul(result, base)
        k >>= 1
        if k:
            base = poly_mul(base, base)
    return result


def poly_shift(p: Poly, r) -> Poly:
    """Return q with q(y) = p(y + r), by Horner's scheme on (y + r)."""
    r = to_rational(r)
    if r == 0 or len(p.coeffs) < 2:
        return p
    out: list = []
    for c in reversed(p.coeffs):
        nxt = [Fraction(0)] * (len(out) + 1)
        for i, v in enumerate(out):
            nxt[i + 1] += v
            nxt[i] += r * v
        nxt[0] += c
        out = nxt
    return Poly(out)


def poly_derivative(p: Poly) -> Poly:
    return Poly(i * c for i, c in enumerate(p.coeffs) if i > 0)


def poly_divmod(p: Poly, d: Poly) -> tuple:
    """Exact long division: returns (quotient, remainder) with deg r < deg d."""
    if d.is_zero:
        raise ValueError("Polynomial division by zero")
    rem = list(p.coeffs)
    dd = len(d.coeffs) - 1
    lead = d.leading
    if len(rem) - 1 < dd:
        return ZERO, p
    quot = [Fraction(0)] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        factor = c / lead
        quot[i - dd] = factor
        for j, dc in enumerate(d.coeffs):
            rem[i - dd + j] -= factor * dc
    return Poly(quot), Poly(rem[:dd])


def monic(p: Poly) -> Poly:
    if p.is_zero:
        return p
    return poly_scale(p, 1 / p.leading)


def primitive(p: Poly) -> Poly:
    """
    Divide by the positive rational content, leaving coprime integer
    coefficients. Signs are preserved.
    """
    if p.is_zero:
        return p
    num_gcd = 0
    den_lcm = 1
    for c in p.coeffs:
        num_gcd = math.gcd(num_gcd, c.numerator)
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    return poly_scale(p, Fraction(den_lcm, num_gcd))


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor by Euclid's algorithm; gcd(0, 0) = 0."""
    a, b = p, q
    while not b.is_zero:
        _, rem = poly_divmod(a, b)
        a, b = b, primitive(rem)
    return monic(a)


def divide_by_x_power(p: Poly, m: int) -> Poly:
    """Exact division by x**m; a nonzero low coefficient is an inconsistency."""
    if m < 0:
        raise ValueError(f"Negative power of x: {m}")
    low = p.coeffs[:m]
    if any(c != 0 for c in low):
        raise InternalInconsistency(f"{p!r} is not divisible by x^{m}")
    return Poly(p.coeffs[m:])


def falling_factorial_poly(n: int, shift=0) -> Poly:
    """(y + shift)_n = (y+shift)(y+shift-1)...(y+shift-n+1) in the monomial basis."""
    if n < 0:
        raise ValueError(f"Negative falling factorial length: {n}")
    shift = to_rational(shift)
    result = ONE
    for i in range(n):
        result = poly_mul(result, Poly([shift - i, 1]))
    return result


def rising_factorial_poly(n: int) -> Poly:
    """<y>_n = y(y+1)...(y+n-1)."""
    if n < 0:
        raise ValueError(f"Negative rising factorial length: {n}")
    result = ONE
    for i in range(n):
        result = poly_mul(result, Poly([i, 1]))
    return result


class FactPoly:
    """
    Polynomial in the falling-factorial basis: ``coeffs[k]`` multiplies (y)_k.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Iterable = ()):
        values = [to_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs = tuple(values)

    @property
    def degree(self):
        if not self.coeffs:
            return NEG_INFINITY
        return len(self.coeffs) - 1

    def __eq__(self, other):
        if not isinstance(other, FactPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(('falling', self.coeffs))

    def __repr__(self):
        return f"FactPoly({[str(c) for c in self.coeffs]})"


def to_falling(p: Poly) -> FactPoly:
    """
    Expand p in falling factorials using y**n = sum_k S(n, k) (y)_k.
    """
    # combinat builds its associated tables on the series engine below
    from .combinat import stirling2

    if p.is_zero:
        return FactPoly()
    out = [Fraction(0)] * len(p.coeffs)
    for n, c in enumerate(p.coeffs):
        if c == 0:
            continue
        for k in range(n + 1):
            s = stirling2(n, k)
            if s:
                out[k] += c * s
    return FactPoly(out)


def from_falling(fp: FactPoly) -> Poly:
    """Inverse of to_falling, using (y)_k = sum_j s(k, j) y**j with signed s."""
    from .combinat import stirling1_signed

    if not fp.coeffs:
        return ZERO
    out = [Fraction(0)] * len(fp.coeffs)
    for k, d in enumerate(fp.coeffs):
        if d == 0:
            continue
        for j in range(k + 1):
            s = stirling1_signed(k, j)
            if s:
                out[j] += d * s
    return Poly(out)


def poly_to_json(p: Poly) -> list:
    """Lowest degree first, each coefficient a reduced "p/q" or integer string."""
    return [str(c) for c in p.coeffs]


def poly_from_json(data) -> Poly:
    """
    Accept the list produced by poly_to_json, or its JSON text.
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ValueError(f"Polynomial is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise ValueError("Polynomial must be a JSON array of coefficient strings")
    return Poly(to_rational(c) for c in data)


class TruncSeries:
    """
    Power series in t with Poly coefficients, truncated at ``order``.

    ``coeffs[n]`` is the coefficient of t**n / n!. There are always exactly
    order + 1 slots.
    """

    __slots__ = ('order', 'coeffs')

    def __init__(self, coeffs: Iterable, order: int):
        if order < 0:
            raise ValueError(f"Negative truncation order: {order}")
        polys = []
        for c in coeffs:
            if len(polys) > order:
                break
            polys.append(c if isinstance(c, Poly) else Poly.constant(c))
        polys.extend([ZERO] * (order + 1 - len(polys)))
        self.order = order
        self.coeffs = tuple(polys)

    def __getitem__(self, n: int) -> Poly:
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncSeries(order={self.order}, coeffs={list(self.coeffs)!r})"

    def scalars(self) -> list:
        """Coefficients as Fractions; every slot must be a constant polynomial."""
        return [c.constant_value() for c in self.coeffs]


def series_from_scalars(values: Sequence, order: int) -> TruncSeries:
    """EGF coefficients given as numbers; missing slots are zero."""
    return TruncSeries((Poly.constant(v) for v in values), order)


def series_identity(order: int) -> TruncSeries:
    return TruncSeries([ONE], order)


def _check_orders(a: TruncSeries, b: TruncSeries):
    if a.order != b.order:
        raise ValueError(f"Series order mismatch: {a.order} != {b.order}")


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    _check_orders(a, b)
    return TruncSeries((p + q for p, q in zip(a.coeffs, b.coeffs)), a.order)


def series_scale(a: TruncSeries, factor) -> TruncSeries:
    """Multiply every coefficient by a Poly (or a scalar)."""
    if not isinstance(factor, Poly):
        factor = Poly.constant(factor)
    return TruncSeries((poly_mul(c, factor) for c in a.coeffs), a.order)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Binomial convolution: c_n = sum_k C(n, k) a_k b_(n-k)."""
    _check_orders(a, b)
    out = []
    for n in range(a.order + 1):
        acc = ZERO
        for k in range(n + 1):
            ak = a.coeffs[k]
            bk = b.coeffs[n - k]
            if ak.is_zero or bk.is_zero:
                continue
            acc = poly_add(acc, poly_scale(poly_mul(ak, bk), math.comb(n, k)))
        out.append(acc)
    return TruncSeries(out, a.order)


def series_pow(a: TruncSeries, k: int) -> TruncSeries:
    if k < 0:
        raise ValueError(f"Negative series power: {k}")
    result = series_identity(a.order)
    base = a
    while k:
        if k & 1:
            result = series_mul(result, base)
        k >>= 1
        if k:
            base = series_mul(base, base)
    return result


def series_exp(a: TruncSeries) -> TruncSeries:
    """
    exp(a) for a series without constant term, from E' = a' E:
    e_(n+1) = sum_k C(n, k) a_(k+1) e_(n-k).
    """
    if not a.coeffs[0].is_zero:
        raise ValueError("series_exp needs a zero constant term")
    e = [ONE]
    for n in range(a.order):
        acc = ZERO
        for k in range(n + 1):
            ak = a.coeffs[k + 1]
            if ak.is_zero:
                continue
            acc = poly_add(acc, poly_scale(poly_mul(ak, e[n - k]), math.comb(n, k)))
        e.append(acc)
    return TruncSeries(e, a.order)


def series_derivative(a: TruncSeries) -> TruncSeries:
    """d/dt; under the EGF convention this drops slot 0 and the order by one."""
    if a.order == 0:
        raise ValueError("Cannot differentiate a series of order 0")
    return TruncSeries(a.coeffs[1:], a.order - 1)
