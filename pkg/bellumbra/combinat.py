"""
Triangles of special numbers: Stirling numbers of both kinds, unsigned
r-Stirling numbers of the first kind, Lah numbers, associated Stirling
numbers of the second kind and binomial coefficients.

Each (kind, parameter) pair owns one lazily grown NumberTable. Tables are
shared process-wide, so growth is serialized by a lock; reads of rows that
already exist never block.
"""

import enum
import logging
import math
import random
import threading

from .exactmath import (
    InternalInconsistency, series_from_scalars, series_identity, series_mul,
)

logger = logging.getLogger(__name__)


class NumberKind(enum.Enum):
    STIRLING1_UNSIGNED = 'stirling1'
    STIRLING1_SIGNED = 'stirling1-signed'
    STIRLING2 = 'stirling2'
    R_STIRLING1_UNSIGNED = 'r-stirling1'
    LAH = 'lah'
    ASSOC_STIRLING2 = 'assoc-stirling2'
    BINOMIAL = 'binomial'

    @property
    def needs_param(self) -> bool:
        return self in (NumberKind.R_STIRLING1_UNSIGNED, NumberKind.ASSOC_STIRLING2)


class NumberTable:
    """
    Triangular table, row n holding entries k = 0..n.

    Rows are appended by the kind's recurrence. Associated Stirling numbers
    have no recurrence here: they are read off the series
    (e^t - sum_{j<m} t^j/j!)^k / k!, so that table is rebuilt in one go at a
    doubled size whenever it is too short.
    """

    def __init__(self, kind: NumberKind, param: int | None = None):
        if kind.needs_param:
            if param is None or param < 0:
                raise ValueError(f"{kind.value} needs a non-negative parameter, got {param!r}")
            if kind is NumberKind.ASSOC_STIRLING2 and param < 1:
                raise ValueError(f"Associated Stirling numbers need m >= 1, got {param}")
        self.kind = kind
        self.param = param
        self._rows: list[list[int]] = []
        self._lock = threading.Lock()

    def __repr__(self):
        return f"NumberTable({self.kind.value}, param={self.param}, rows={len(self._rows)})"

    @property
    def size(self) -> int:
        return len(self._rows)

    def get(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        self.ensure(n)
        return self._rows[n][k]

    def row(self, n: int) -> list[int]:
        if n < 0:
            return []
        self.ensure(n)
        return list(self._rows[n])

    def ensure(self, n: int):
        if n < len(self._rows):
            return
        with self._lock:
            if n < len(self._rows):
                return
            if self.kind is NumberKind.ASSOC_STIRLING2:
                target = max(n, 2 * len(self._rows), 8)
                self._rows = _assoc_rows(self.param, target)
            else:
                rows = list(self._rows)
                while len(rows) <= n:
                    rows.append(self._next_row(rows))
                self._rows = rows
            logger.debug('Grew %s table to %s rows', self.kind.value, len(self._rows))

    def _next_row(self, rows: list[list[int]]) -> list[int]:
        n = len(rows)
        prev = rows[n - 1] if n else []

        def at(k):
            return prev[k] if 0 <= k < len(prev) else 0

        kind = self.kind
        if kind is NumberKind.STIRLING2:
            if n == 0:
                return [1]
            return [k * at(k) + at(k - 1) for k in range(n + 1)]
        if kind is NumberKind.STIRLING1_UNSIGNED:
            if n == 0:
                return [1]
            return [(n - 1) * at(k) + at(k - 1) for k in range(n + 1)]
        if kind is NumberKind.STIRLING1_SIGNED:
            if n == 0:
                return [1]
            return [at(k - 1) - (n - 1) * at(k) for k in range(n + 1)]
        if kind is NumberKind.R_STIRLING1_UNSIGNED:
            r = self.param
            if n < r:
                return [0] * (n + 1)
            if n == r:
                return [0] * r + [1]
            return [(n - 1) * at(k) + at(k - 1) for k in range(n + 1)]
        if kind is NumberKind.LAH:
            if n == 0:
                return [1]
            return [0] + [
                math.comb(n - 1, k - 1) * math.factorial(n) // math.factorial(k)
                for k in range(1, n + 1)
            ]
        if kind is NumberKind.BINOMIAL:
            if n == 0:
                return [1]
            return [at(k) + at(k - 1) for k in range(n + 1)]
        raise ValueError(f"No recurrence for {kind.value}")


def _assoc_rows(m: int, n_max: int) -> list[list[int]]:
    """n! [t^n] (e^t - sum_{j<m} t^j/j!)^k / k! for 0 <= k <= n <= n_max."""
    block = series_from_scalars([0] * m + [1] * (n_max + 1 - m), n_max)
    rows = [[0] * (n + 1) for n in range(n_max + 1)]
    power = series_identity(n_max)
    for k in range(n_max + 1):
        if k:
            power = series_mul(power, block)
        if k * m > n_max:
            break
        fk = math.factorial(k)
        for n, v in enumerate(power.scalars()):
            if n < k or v == 0:
                continue
            if v.denominator != 1 or v.numerator % fk:
                raise InternalInconsistency(
                    f"Associated Stirling entry ({n}, {k}) for m={m} is not integral: {v}/{fk}"
                )
            rows[n][k] = v.numerator // fk
    return rows


_TABLES: dict[tuple, NumberTable] = {}
_TABLES_LOCK = threading.Lock()


def table(kind: NumberKind, param: int | None = None) -> NumberTable:
    """The shared cached table for a kind (and parameter, where it has one)."""
    key = (kind, param if kind.needs_param else None)
    found = _TABLES.get(key)
    if found is not None:
        return found
    with _TABLES_LOCK:
        if key not in _TABLES:
            _TABLES[key] = NumberTable(kind, key[1])
        return _TABLES[key]


def stirling2(n: int, k: int) -> int:
    return table(NumberKind.STIRLING2).get(n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    return table(NumberKind.STIRLING1_UNSIGNED).get(n, k)


def stirling1_signed(n: int, k: int) -> int:
    return table(NumberKind.STIRLING1_SIGNED).get(n, k)


def r_stirling1_unsigned(n: int, k: int, r: int) -> int:
    return table(NumberKind.R_STIRLING1_UNSIGNED, r).get(n, k)


def lah(n: int, k: int) -> int:
    return table(NumberKind.LAH).get(n, k)


def assoc_stirling2(m: int, n: int, k: int) -> int:
    return table(NumberKind.ASSOC_STIRLING2, m).get(n, k)


def binomial(n: int, k: int) -> int:
    return table(NumberKind.BINOMIAL).get(n, k)


def bell_number(n: int) -> int:
    return sum(table(NumberKind.STIRLING2).row(n))


def bell_triangle_number(n: int) -> int:
    """Bell number from Aitken's array, independent of the Stirling table."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def triangle(kind: NumberKind, rows: int, param: int | None = None) -> list[list[int]]:
    """Rows 0..rows-1 of a table."""
    t = table(kind, param)
    return [t.row(n) for n in range(rows)]


def rederive(kind: NumberKind, n: int, k: int, param: int | None = None) -> int:
    """Recompute one entry from a fresh, uncached table."""
    return NumberTable(kind, param).get(n, k)


def audit_table(kind: NumberKind, samples: int = 100, seed: int = 0,
                param: int | None = None, n_max: int = 30) -> list[tuple[int, int]]:
    """
    Compare ``samples`` random cached entries against fresh recomputation.
    Returns the mismatching (n, k) pairs.
    """
    rng = random.Random(seed)
    cached = table(kind, param)
    mismatches = []
    for _ in range(samples):
        n = rng.randint(0, n_max)
        k = rng.randint(0, n)
        if cached.get(n, k) != rederive(kind, n, k, param):
            mismatches.append((n, k))
    if mismatches:
        logger.warning('Table %s audit found %s mismatches', kind.value, len(mismatches))
    return mismatches
