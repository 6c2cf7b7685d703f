"""
Partial Bell and partial r-Bell polynomials evaluated at numeric sequences,
and the polynomial families built from them:

- V_{n,r}(x) = sum_k B^{(r)}_{n+r,k+r}(a; e + L a) x**k, by series extraction
  and, independently, by the umbral route f_n(B_x + r);
- iterated families A_n^{(s)}: A^{(0)} from exp(x h(t)), each further level
  the umbral image of the previous one;
- convolution families f_n^{(r)} with EGF F(t) h(t)**r exp(x h(t)).

Sequences are 1-indexed (a_1, a_2, ...). Every generating function uses the
EGF convention of ``exactmath.TruncSeries``.
"""

import json
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .combinat import (
    assoc_stirling2, binomial, lah, stirling1_unsigned, stirling2,
)
from .exactmath import (
    X, FactPoly, InternalInconsistency, Poly, TruncSeries, falling_factorial_poly,
    from_falling, poly_derivative, poly_scale, poly_shift, rising_factorial_poly,
    series_exp, series_from_scalars, series_identity, series_mul, series_pow,
    series_scale, to_rational,
)
from .rzcert import SeqVerdict, is_log_concave
from .umbra import bell_poly, lah_poly, umbral_eval

logger = logging.getLogger(__name__)


class Seq:
    """
    Finite prefix a_1, ..., a_m of a numeric sequence. ``seq[j]`` is a_j.
    """

    __slots__ = ('entries', 'name')

    def __init__(self, entries: Sequence = (), name: str | None = None):
        self.entries = tuple(to_rational(v) for v in entries)
        self.name = name

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, j: int) -> Fraction:
        if not 1 <= j <= len(self.entries):
            raise IndexError(f"Sequence index {j} outside 1..{len(self.entries)}")
        return self.entries[j - 1]

    def __eq__(self, other):
        if not isinstance(other, Seq):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        label = f", name={self.name!r}" if self.name else ''
        return f"Seq({[str(v) for v in self.entries]}{label})"

    def to_json(self) -> list:
        return [str(v) for v in self.entries]


@dataclass(frozen=True)
class RBellSpec:
    a: Seq
    b: Seq
    r: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError(f"r must be non-negative, got {self.r}")


def ones(length: int) -> Seq:
    return Seq([1] * length, name='ones')


def factorials(length: int) -> Seq:
    """(1!, 2!, 3!, ...)."""
    return Seq([math.factorial(j) for j in range(1, length + 1)], name='factorials')


def cycle_counts(length: int) -> Seq:
    """((j-1)!): the coefficients of -ln(1 - t)."""
    return Seq([math.factorial(j - 1) for j in range(1, length + 1)], name='cycle')


def alternating_cycle_counts(length: int) -> Seq:
    """((-1)**(j-1) (j-1)!): the coefficients of ln(1 + t)."""
    return Seq([(-1) ** (j - 1) * math.factorial(j - 1) for j in range(1, length + 1)],
               name='alt-cycle')


def shift_seq(a: Seq, m: int) -> Seq:
    """L**m a: m zeros in front."""
    if m < 0:
        raise ValueError(f"Shift must be non-negative, got {m}")
    if m == 0:
        return a
    name = f"L^{m} {a.name}" if a.name else None
    return Seq((0,) * m + a.entries, name=name)


def e_plus(a: Seq) -> Seq:
    """e + L a = (1, a_1, a_2, ...)."""
    return Seq((1,) + a.entries, name=f"e+L {a.name}" if a.name else None)


def parse_seq(text: str, length: int) -> Seq:
    """
    Preset name ("ones", "shift:m", "factorials", "cycle", "alt-cycle") or an
    inline JSON array of rational strings.
    """
    text = text.strip()
    if text.startswith('['):
        try:
            values = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"Sequence is not valid JSON: {exc}") from exc
        return Seq(values)
    if text == 'ones':
        return ones(length)
    if text == 'factorials':
        return factorials(length)
    if text == 'cycle':
        return cycle_counts(length)
    if text == 'alt-cycle':
        return alternating_cycle_counts(length)
    if text.startswith('shift:'):
        try:
            m = int(text.split(':', 1)[1])
        except ValueError as exc:
            raise ValueError(f"Bad shift preset {text!r}") from exc
        seq = shift_seq(ones(max(length - m, 0)), m)
        return Seq(seq.entries[:length], name=text)
    raise ValueError(f"Unknown sequence preset {text!r}")


def _require_length(seq: Seq, needed: int, label: str):
    if len(seq) < needed:
        raise ValueError(f"Sequence {label} has {len(seq)} entries, {needed} needed")


def _egf(a: Seq, order: int) -> TruncSeries:
    """sum_j a_j t**j / j!, truncated; missing entries are zero."""
    return series_from_scalars((0,) + a.entries[:order], order)


def _shifted_egf(b: Seq, order: int) -> TruncSeries:
    """sum_j b_(j+1) t**j / j!."""
    return series_from_scalars(b.entries[:order + 1], order)


def partial_bell(n: int, k: int, a: Seq) -> Fraction:
    """B_{n,k}(a) = n! [t**n] (sum_j a_j t**j/j!)**k / k!."""
    if n < 0 or k < 0:
        raise ValueError(f"Partial Bell indices must be non-negative, got ({n}, {k})")
    if k > n:
        return Fraction(0)
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    _require_length(a, n - k + 1, 'a')
    power = series_pow(_egf(a, n), k)
    return power[n].constant_value() / math.factorial(k)


def partial_r_bell(n: int, k: int, spec: RBellSpec) -> Fraction:
    """
    B^{(r)}_{n+r,k+r}(a; b) = n! [t**n] (sum_j a_j t**j/j!)**k / k!
    * (sum_j b_(j+1) t**j/j!)**r.
    """
    if n < 0 or k < 0:
        raise ValueError(f"Partial r-Bell indices must be non-negative, got ({n}, {k})")
    if k > n:
        return Fraction(0)
    if k:
        _require_length(spec.a, n - k + 1, 'a')
    if spec.r:
        _require_length(spec.b, n - k + 1, 'b')
    product = series_mul(series_pow(_egf(spec.a, n), k),
                         series_pow(_shifted_egf(spec.b, n), spec.r))
    return product[n].constant_value() / math.factorial(k)


def _r_bell_row(n: int, spec: RBellSpec) -> list[Fraction]:
    """[B^{(r)}_{n+r,k+r}(a; b) for k = 0..n], sharing the series powers."""
    if n:
        _require_length(spec.a, n, 'a')
    if spec.r:
        _require_length(spec.b, n + 1, 'b')
    phi = _egf(spec.a, n)
    tail = series_pow(_shifted_egf(spec.b, n), spec.r)
    row = []
    power = series_identity(n)
    for k in range(n + 1):
        if k:
            power = series_mul(power, phi)
        row.append(series_mul(power, tail)[n].constant_value() / math.factorial(k))
    return row


def partial_bell_row(n: int, a: Seq) -> list[Fraction]:
    return _r_bell_row(n, RBellSpec(a, Seq(), 0))


def v_poly(n: int, r: int, a: Seq) -> Poly:
    """V_{n,r}(x) = sum_k B^{(r)}_{n+r,k+r}(a; e + L a) x**k."""
    if n < 0:
        raise ValueError(f"Index must be non-negative, got {n}")
    return Poly(_r_bell_row(n, RBellSpec(a, e_plus(a), r)))


def v_poly_umbral(n: int, r: int, a: Seq) -> Poly:
    """f_n(B_x + r) with f_n(y) = sum_k B_{n,k}(a) (y)_k."""
    if n < 0:
        raise ValueError(f"Index must be non-negative, got {n}")
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    f_n = from_falling(FactPoly(partial_bell_row(n, a)))
    return umbral_eval(poly_shift(f_n, r))


def assoc_bell_poly(m: int, n: int) -> Poly:
    """sum_k {n k}^{(m)} x**k."""
    return Poly(assoc_stirling2(m, n, k) for k in range(n + 1))


def _exp_family(h: Seq, n_max: int) -> list[Poly]:
    """Coefficients of exp(x h(t)) up to t**n_max / n_max!."""
    _require_length(h, n_max, 'h')
    return list(series_exp(series_scale(_egf(h, n_max), X)).coeffs)


def check_iterated_egf(previous: Sequence[Poly], current: Sequence[Poly]) -> bool:
    """
    current_n == n! [t**n] exp(x sum_{j>=1} previous_j(1) t**j/j!) for every n.
    """
    n_max = len(current) - 1
    values = Seq(p(1) for p in previous[1:n_max + 1])
    return list(current) == _exp_family(values, n_max)


def iterated_family(h: Seq, s: int, n_max: int, verify: bool = True) -> list[Poly]:
    """
    [A_n^{(s)}(x) for n = 0..n_max]. With ``verify`` each level is checked
    against the EGF identity and a mismatch raises InternalInconsistency.
    """
    if s < 0:
        raise ValueError(f"Iteration count must be non-negative, got {s}")
    level = _exp_family(h, n_max)
    for step in range(1, s + 1):
        nxt = [umbral_eval(p) for p in level]
        if verify and not check_iterated_egf(level, nxt):
            raise InternalInconsistency(f"EGF identity failed at iteration {step}")
        level = nxt
    return level


def iterated_sequence(h: Seq, s: int, length: int) -> Seq:
    """(A_1^{(s)}(1), ..., A_length^{(s)}(1))."""
    family = iterated_family(h, s, length, verify=False)
    return Seq((p(1) for p in family[1:]), name=f"A^({s})(1)")


def remark_family(h: Seq, s: int, n: int, r: int) -> Poly:
    """V_{n,r}^{(s)}(x): v_poly over the sequence A^{(s)}_j(1)."""
    return v_poly(n, r, iterated_sequence(h, s, max(n, 1)))


def bender_canfield_hypothesis(h: Seq, s: int, n_max: int) -> SeqVerdict:
    """Log-concavity of (A_n^{(s)}(1) / (n-1)!) for n = 1..n_max."""
    family = iterated_family(h, s, n_max, verify=False)
    values = [family[n](1) / math.factorial(n - 1) for n in range(1, n_max + 1)]
    return is_log_concave(values, strict_positivity_required=True)


def _f_levels(F: Sequence, h: Seq, r: int, n_max: int) -> list[list[Poly]]:
    """Unscaled [f^{(0)}, ..., f^{(r)}], each a list over n = 0..n_max."""
    _require_length(h, n_max, 'h')
    base = series_mul(series_from_scalars(F, n_max),
                      series_exp(series_scale(_egf(h, n_max), X)))
    h_series = _egf(h, n_max)
    levels = [list(base.coeffs)]
    current = base
    for _ in range(r):
        current = series_mul(current, h_series)
        levels.append(list(current.coeffs))
    return levels


def check_derivative_identity(levels: Sequence[Sequence[Poly]]) -> bool:
    """f_n^{(r)} == d/dx f_n^{(r-1)} for every stored level and n."""
    for r in range(1, len(levels)):
        for prev, cur in zip(levels[r - 1], levels[r]):
            if cur != poly_derivative(prev):
                return False
    return True


def convolution_form(f0: Sequence[Poly], h: Seq, r: int, n: int) -> Poly:
    """r! sum_{k=r}^{n} C(n, k) B_{k,r}(h) f_{n-k}^{(0)}."""
    total = Poly()
    for k in range(r, n + 1):
        weight = binomial(n, k) * partial_bell(k, r, h)
        if weight:
            total = total + poly_scale(f0[n - k], weight)
    return poly_scale(total, math.factorial(r))


def check_convolution_form(levels: Sequence[Sequence[Poly]], h: Seq) -> bool:
    r = len(levels) - 1
    f0 = levels[0]
    return all(levels[r][n] == convolution_form(f0, h, r, n) for n in range(len(f0)))


def f_family(F: Sequence, h: Seq, r: int, n_max: int,
             scale: Callable[[int], Fraction] | None = None,
             verify: bool = True) -> list[Poly]:
    """
    [f_n^{(r)}(x) for n = 0..n_max] from sum_n f_n^{(r)} t**n/n! =
    scale(r) F(t) h(t)**r exp(x h(t)).

    F lists EGF coefficients from index 0; entries past its end are zero.
    The identities are checked on the unscaled family: the derivative
    identity always, the convolution closed form when F = 1.
    """
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    F = [to_rational(v) for v in F]
    levels = _f_levels(F, h, r, n_max)
    if verify:
        if not check_derivative_identity(levels):
            raise InternalInconsistency(f"Derivative identity failed for r <= {r}")
        if _is_one(F) and not check_convolution_form(levels, h):
            raise InternalInconsistency(f"Convolution form failed for r = {r}")
    factor = scale(r) if scale else Fraction(1)
    return [poly_scale(p, factor) for p in levels[r]]


def _is_one(F: Sequence[Fraction]) -> bool:
    return bool(F) and F[0] == 1 and all(v == 0 for v in F[1:])


def _stirling2_printed(n: int, r: int) -> Poly:
    total = Poly()
    for k in range(r, n + 1):
        total = total + poly_scale(bell_poly(n - k), binomial(n, k) * stirling2(n, k))
    return poly_scale(total, math.factorial(r))


def _stirling2_derived(n: int, r: int) -> Poly:
    total = Poly()
    for k in range(r, n + 1):
        total = total + poly_scale(bell_poly(n - k), binomial(n, k) * stirling2(k, r))
    return poly_scale(total, math.factorial(r))


def _stirling1_form(n: int, r: int) -> Poly:
    total = Poly()
    for k in range(r, n + 1):
        weight = (-1) ** (k - r) * binomial(n, k) * stirling1_unsigned(k, r)
        total = total + poly_scale(falling_factorial_poly(n - k), weight)
    return poly_scale(total, math.factorial(r))


def _cycle_derived(n: int, r: int) -> Poly:
    total = Poly()
    for k in range(r, n + 1):
        weight = binomial(n, k) * stirling1_unsigned(k, r)
        total = total + poly_scale(rising_factorial_poly(n - k), weight)
    return poly_scale(total, math.factorial(r))


def _lah_printed(n: int, r: int) -> Poly:
    total = Poly()
    for k in range(r, n + 1):
        weight = (-1) ** (k - r) * binomial(n, k) * lah(k, r)
        total = total + poly_scale(lah_poly(n - k), weight)
    return poly_scale(total, math.factorial(r))


def _lah_derived(n: int, r: int) -> Poly:
    # includes the 1/r! prefactor of the generating function
    total = Poly()
    for k in range(r, n + 1):
        total = total + poly_scale(lah_poly(n - k), binomial(n, k) * lah(k, r))
    return total


@dataclass(frozen=True)
class FamilyPreset:
    """
    One h(t) (and F, scale) with the closed forms that go with it.
    ``printed_form`` is the summation as it is usually quoted, which may be
    wrong; ``derived_form`` is the summation that follows from the EGF.
    """
    name: str
    description: str
    h: Callable[[int], Seq]
    F: tuple = (1,)
    scale: Callable[[int], Fraction] | None = None
    printed_form: Callable[[int, int], Poly] | None = None
    derived_form: Callable[[int, int], Poly] | None = None

    def family(self, r: int, n_max: int, verify: bool = True) -> list[Poly]:
        return f_family(self.F, self.h(max(n_max, 1)), r, n_max, self.scale, verify)


def _inverse_factorial(r: int) -> Fraction:
    return Fraction(1, math.factorial(r))


FAMILY_PRESETS = {
    'exp': FamilyPreset(
        name='exp',
        description='h = e^t - 1 (a_j = 1): Bell polynomials, Stirling-2 convolutions',
        h=ones,
        printed_form=_stirling2_printed,
        derived_form=_stirling2_derived,
    ),
    'log': FamilyPreset(
        name='log',
        description='h = -ln(1 - t) (a_j = (j-1)!): rising factorials, Lah polynomials',
        h=cycle_counts,
        derived_form=_cycle_derived,
    ),
    'log1p': FamilyPreset(
        name='log1p',
        description='h = ln(1 + t): falling factorials, Stirling-1 convolutions',
        h=alternating_cycle_counts,
        printed_form=_stirling1_form,
        derived_form=_stirling1_form,
    ),
    'lah': FamilyPreset(
        name='lah',
        description='h = t/(1 - t) with a 1/r! prefactor: Lah polynomials, Lah convolutions',
        h=factorials,
        scale=_inverse_factorial,
        printed_form=_lah_printed,
        derived_form=_lah_derived,
    ),
}


def family_preset(name: str) -> FamilyPreset:
    try:
        return FAMILY_PRESETS[name]
    except KeyError:
        raise ValueError(
            f"Unknown family preset {name!r}; expected one of {sorted(FAMILY_PRESETS)}"
        ) from None
