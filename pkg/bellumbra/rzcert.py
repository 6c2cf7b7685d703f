"""
Real-rootedness certificates by Sturm sequences, and log-concavity /
log-convexity predicates for sequences.

Root counting is exact. Sign variations are read at +infinity and
-infinity from leading coefficients and degree parities, so no root bounds
are needed. Multiplicities are restored by walking the chain
p, gcd(p, p'), gcd(gcd(p, p'), ...), ... and counting the distinct real
roots of each square-free quotient.
"""

import enum
import logging
from dataclasses import dataclass
from typing import Sequence

from .exactmath import (
    Poly, monic, poly_derivative, poly_divmod, poly_gcd, primitive, to_rational,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RZCertificate:
    all_real: bool
    degree: int
    real_root_count_with_multiplicity: int
    squarefree_part_degree: int
    sturm_sign_variations: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            'all_real': self.all_real,
            'degree': self.degree,
            'real_root_count_with_multiplicity': self.real_root_count_with_multiplicity,
            'squarefree_part_degree': self.squarefree_part_degree,
            'sturm_sign_variations': list(self.sturm_sign_variations),
        }


class SeqProperty(enum.Enum):
    LOG_CONCAVE = 'log_concave'
    LOG_CONVEX = 'log_convex'


@dataclass(frozen=True)
class SeqVerdict:
    property: SeqProperty
    holds: bool
    first_violation_index: int | None = None

    def to_dict(self) -> dict:
        return {
            'property': self.property.value,
            'holds': self.holds,
            'first_violation_index': self.first_violation_index,
        }


def _require_nonzero(p: Poly):
    if p.is_zero:
        raise ValueError("The zero polynomial has no root structure to certify")


def squarefree_part(p: Poly) -> Poly:
    """p / gcd(p, p'), monic."""
    _require_nonzero(p)
    g = poly_gcd(p, poly_derivative(p))
    quotient, _ = poly_divmod(p, g)
    return monic(quotient)


def sturm_chain(p: Poly) -> list[Poly]:
    """
    p, p', then negated remainders until zero. Each member is scaled by a
    positive rational to integer content 1, which keeps every sign.
    """
    _require_nonzero(p)
    chain = [primitive(p)]
    d = poly_derivative(p)
    if d.is_zero:
        return chain
    chain.append(primitive(d))
    while True:
        _, rem = poly_divmod(chain[-2], chain[-1])
        if rem.is_zero:
            break
        chain.append(primitive(-rem))
    return chain


def _variations(signs: Sequence[int]) -> int:
    count = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def sign_variations_at_infinity(chain: Sequence[Poly]) -> tuple[int, int]:
    """(variations at -infinity, variations at +infinity)."""
    at_pos = [_sign(q.leading) for q in chain]
    at_neg = [_sign(q.leading) * (-1 if q.degree % 2 else 1) for q in chain]
    return _variations(at_neg), _variations(at_pos)


def _distinct_real_roots(p: Poly) -> tuple[int, tuple[int, int]]:
    neg, pos = sign_variations_at_infinity(sturm_chain(p))
    return neg - pos, (neg, pos)


def real_root_count(p: Poly) -> int:
    """Number of real roots counted with multiplicity."""
    _require_nonzero(p)
    total = 0
    current = p
    while current.degree >= 1:
        g = poly_gcd(current, poly_derivative(current))
        quotient, _ = poly_divmod(current, g)
        distinct, _ = _distinct_real_roots(quotient)
        total += distinct
        current = g
    return total


def certify_rz(p: Poly) -> RZCertificate:
    """
    Decide whether every root of p is real, counting multiplicity.
    Constants are certified vacuously.
    """
    _require_nonzero(p)
    sqf = squarefree_part(p)
    _, variations = _distinct_real_roots(sqf)
    count = real_root_count(p)
    cert = RZCertificate(
        all_real=count == p.degree,
        degree=p.degree,
        real_root_count_with_multiplicity=count,
        squarefree_part_degree=sqf.degree,
        sturm_sign_variations=variations,
    )
    logger.debug('Certified degree %s polynomial: %s real roots', p.degree, count)
    return cert


def _verdict(values, prop: SeqProperty, strict_positivity_required: bool) -> SeqVerdict:
    values = [to_rational(v) for v in values]
    if not values:
        raise ValueError("Sequence predicates need at least one entry")
    for i, v in enumerate(values):
        if strict_positivity_required and v <= 0:
            return SeqVerdict(prop, False, i)
        if 0 < i < len(values) - 1:
            square = v * v
            outer = values[i - 1] * values[i + 1]
            ok = square >= outer if prop is SeqProperty.LOG_CONCAVE else square <= outer
            if not ok:
                return SeqVerdict(prop, False, i)
    return SeqVerdict(prop, True)


def is_log_concave(a: Sequence, strict_positivity_required: bool = False) -> SeqVerdict:
    """a_n**2 >= a_(n-1) a_(n+1) at every interior index."""
    return _verdict(a, SeqProperty.LOG_CONCAVE, strict_positivity_required)


def is_log_convex(a: Sequence, strict_positivity_required: bool = False) -> SeqVerdict:
    """a_n**2 <= a_(n-1) a_(n+1) at every interior index."""
    return _verdict(a, SeqProperty.LOG_CONVEX, strict_positivity_required)


def newton_consistent(p: Poly) -> bool:
    """
    A real-rooted polynomial with non-negative coefficients has log-concave
    coefficients. False means the certificate and the coefficients disagree.
    """
    cert = certify_rz(p)
    if not cert.all_real or any(c < 0 for c in p.coeffs):
        return True
    return is_log_concave(p.coeffs).holds
