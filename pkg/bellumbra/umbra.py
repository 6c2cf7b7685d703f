"""
The generalized Bell umbra as an operator on polynomials.

U[f] expands f(y) in falling factorials and replaces (y)_k by x**k, which is
f evaluated at the Bell umbra. The operator T_r(f) = x**r U[f(y + r)] is
(B_x)_r f(B_x). Chains of T_r can be read two ways:

- "fold": apply T_r1, read the result as a polynomial in y again, apply
  T_r2, and so on (left to right).
- "product": evaluate (y)_r1 ... (y)_rp f(y) under a single U. This reading
  does not depend on the order of the r's.

The two readings agree for a single r and in general differ for longer
chains; ``chain_order_report`` makes that visible.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinat import binomial, stirling2
from .exactmath import (
    Poly, divide_by_x_power, falling_factorial_poly, poly_derivative,
    poly_mul, poly_shift, to_falling, to_rational,
)

logger = logging.getLogger(__name__)

DOBINSKI_TERMS = 300

FOLD = 'fold'
PRODUCT = 'product'
READINGS = (FOLD, PRODUCT)


@dataclass(frozen=True)
class UmbralResult:
    value: Poly
    source: Poly
    chain: tuple[int, ...] = ()
    reading: str = FOLD

    def to_dict(self) -> dict:
        return {
            'value': [str(c) for c in self.value.coeffs],
            'source': [str(c) for c in self.source.coeffs],
            'chain': list(self.chain),
            'reading': self.reading,
        }


def _check_r(r: int):
    if r < 0:
        raise ValueError(f"Falling factorial index must be non-negative, got {r}")


def umbral_eval(f: Poly) -> Poly:
    """U[f]: sum_k d_k x**k where f(y) = sum_k d_k (y)_k."""
    return Poly(to_falling(f).coeffs)


def bell_poly(n: int) -> Poly:
    """B_n(x) = sum_k S(n, k) x**k."""
    if n < 0:
        raise ValueError(f"Bell polynomial index must be non-negative, got {n}")
    return Poly(stirling2(n, k) for k in range(n + 1))


def r_bell_poly(n: int, r: int) -> Poly:
    """B_{n,r}(x) = U[(y + r)**n]."""
    if n < 0:
        raise ValueError(f"r-Bell polynomial index must be non-negative, got {n}")
    _check_r(r)
    return umbral_eval(poly_shift(Poly.monomial(n), r))


def lah_poly(n: int) -> Poly:
    """L_n(x) = U[(y + n - 1)_n]."""
    if n < 0:
        raise ValueError(f"Lah polynomial index must be non-negative, got {n}")
    return umbral_eval(falling_factorial_poly(n, n - 1))


def apply_falling_op(f: Poly, r: int) -> Poly:
    """T_r(f) = x**r U[f(y + r)], i.e. (B_x)_r f(B_x)."""
    _check_r(r)
    return poly_mul(Poly.monomial(r), umbral_eval(poly_shift(f, r)))


def direct_falling_op(f: Poly, r: int) -> Poly:
    """(B_x)_r f(B_x) computed as U[(y)_r f(y)], without the shift identity."""
    _check_r(r)
    return umbral_eval(poly_mul(falling_factorial_poly(r), f))


def apply_falling_chain(f: Poly, rs: Sequence[int]) -> Poly:
    """Left fold of T_r over rs, first element applied first; rs = () gives U[f]."""
    if not rs:
        return umbral_eval(f)
    g = f
    for r in rs:
        g = apply_falling_op(g, r)
        logger.debug('T_%s step gives degree %s', r, g.degree)
    return g


def apply_falling_product(f: Poly, rs: Sequence[int]) -> Poly:
    """U[(y)_r1 ... (y)_rp f(y)]."""
    g = f
    for r in rs:
        _check_r(r)
        g = poly_mul(g, falling_factorial_poly(r))
    return umbral_eval(g)


def umbral_apply(f: Poly, rs: Sequence[int], reading: str = FOLD) -> UmbralResult:
    if reading == FOLD:
        value = apply_falling_chain(f, rs)
    elif reading == PRODUCT:
        value = apply_falling_product(f, rs)
    else:
        raise ValueError(f"Unknown chain reading {reading!r}; expected one of {READINGS}")
    return UmbralResult(value=value, source=f, chain=tuple(rs), reading=reading)


def multi_r_bell(n: int, rs: Sequence[int], reading: str = FOLD) -> Poly:
    """
    B_{n; r1..rp}(x): the chain applied to y**n, divided by x**max(rs).

    The fold reading is divisible by x**max(rs) when the largest r comes
    last; other orders may leave a remainder, e.g. n = 1, rs = [2, 1]. A
    nonzero remainder raises InternalInconsistency. The product reading is
    order free and always divides.
    """
    if n < 0:
        raise ValueError(f"Index must be non-negative, got {n}")
    value = umbral_apply(Poly.monomial(n), rs, reading).value
    return divide_by_x_power(value, max(rs, default=0))


def falling_op_closed_form(n: int, r: int) -> Poly:
    """x**r sum_{k <= min(n, r)} C(n, k) r!/(r-k)! x**(n-k), the expansion of T_r((y)_n)."""
    _check_r(r)
    coeffs = [0] * (n + r + 1)
    for k in range(min(n, r) + 1):
        coeffs[r + n - k] += binomial(n, k) * math.perm(r, k)
    return Poly(coeffs)


def chain_order_report(f: Poly, rs: Sequence[int]) -> dict:
    """
    Fold f over every distinct ordering of rs. ``order_dependent`` is True
    when two orderings give different polynomials; ``witness`` then names them.
    """
    results = {}
    for perm in sorted(set(itertools.permutations(rs))):
        results[perm] = apply_falling_chain(f, perm)
    values = list(results.items())
    witness = None
    for (p1, v1), (p2, v2) in itertools.combinations(values, 2):
        if v1 != v2:
            witness = [list(p1), list(p2)]
            break
    return {
        'chain': list(rs),
        'orderings': len(values),
        'order_dependent': witness is not None,
        'witness': witness,
    }


def dobinski_oracle(f: Poly, x0, terms: int = DOBINSKI_TERMS) -> float:
    """
    e**(-x0) * sum_{k < terms} f(k) x0**k / k!, with the partial sum kept exact
    and only the final product taken in floating point.
    """
    if terms < 1:
        raise ValueError(f"Dobinski oracle needs at least one term, got {terms}")
    x0 = to_rational(x0)
    if x0 < 0:
        raise ValueError(f"Dobinski oracle needs x0 >= 0, got {x0}")
    partial = Fraction(0)
    term = Fraction(1)
    for k in range(terms):
        if k:
            term = term * x0 / k
        partial += f(k) * term
    try:
        return math.exp(-float(x0)) * float(partial)
    except OverflowError:
        pass
    # the partial sum alone exceeds the float range; combine in log space
    if partial == 0:
        return 0.0
    log_value = (math.log(abs(partial.numerator)) - math.log(partial.denominator)
                 - float(x0))
    try:
        value = math.exp(log_value)
    except OverflowError:
        raise ValueError(
            f"Dobinski sum at x0 = {x0} with {terms} terms exceeds the float range"
        ) from None
    return value if partial > 0 else -value


def rolle_step_check(f: Poly, r: int) -> bool:
    """
    U[f(y + r)] == U[f(y + r - 1)] + d/dx U[f(y + r - 1)], the derivative
    identity d/dx (e^x f(B_x + r - 1)) = e^x f(B_x + r).
    """
    if r < 1:
        raise ValueError(f"Rolle step needs r >= 1, got {r}")
    lhs = umbral_eval(poly_shift(f, r))
    base = umbral_eval(poly_shift(f, r - 1))
    return lhs == base + poly_derivative(base)
