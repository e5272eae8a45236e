"""Closed-form counters for Grand-Dyck paths, in exact integer arithmetic.

Everything here is computed as an integer product followed by an exact
division; a nonzero remainder means the formula was applied outside its
domain and raises rather than rounding.  Counters return 0 outside their
combinatorial support so that unconstrained summation loops are safe; the
single flagged degeneracy (``v_count`` at j + k >= 2n) raises DomainError
instead, since no low-peak-free path attains it.
"""

import math
from collections.abc import Iterator
from typing import NamedTuple, Optional

from .errors import DomainError
from . import paths

__all__ = [
    "binomial",
    "catalan",
    "dyck_components_count",
    "v_count",
    "u_count",
    "munarini_term",
    "irreducible_pairs_count",
    "count_item3",
    "count_item4",
    "count_item5",
    "IdentityCell",
    "IdentityReport",
    "verify_identity",
]


def _exact_div(numerator: int, denominator: int) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise ArithmeticError(
            f"non-exact division {numerator}/{denominator} in a counting formula"
        )
    return q


def binomial(a: int, b: int) -> int:
    """Binomial coefficient with the usual convention: 0 when b < 0 or b > a."""
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


def catalan(n: int) -> int:
    """n-th Catalan number, the count of Dyck paths of semilength n."""
    return _exact_div(binomial(2 * n, n), n + 1)


def dyck_components_count(n: int, k: int) -> int:
    """Dyck paths of semilength n with exactly k components.

    Equals k/(2n-k) * binomial(2n-k, n-k) for 1 <= k <= n; the empty path is
    the single path with (n, k) = (0, 0).
    """
    if k < 0 or k > n:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    return _exact_div(k * binomial(2 * n - k, n - k), 2 * n - k)


def v_count(n: int, j: int, k: int) -> int:
    """Low-peak-free Grand-Dyck paths of size n with j components above
    ground level and k - j below.

    Value is binomial(k, j) * (j+k)/(2n-j-k) * binomial(2n-j-k, n-j-k); cells
    outside 0 <= j <= k are 0 by the binomial convention.  Raises DomainError
    at j + k >= 2n, which no low-peak-free path attains.  By convention
    v_count(0, 0, 0) = 1 for the empty path.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1 if j == 0 and k == 0 else 0
    if j + k >= 2 * n:
        raise DomainError(
            f"v_count is degenerate at j + k >= 2n (n={n}, j={j}, k={k})"
        )
    if j < 0 or k < j:
        return 0
    numerator = binomial(k, j) * (j + k) * binomial(2 * n - j - k, n - j - k)
    return _exact_div(numerator, 2 * n - j - k)


def u_count(n: int, i: int, j: int, k: int) -> int:
    """Grand-Dyck paths of size n with i low peaks, j components above ground
    level, and k components altogether.

    Total function: returns the closed form
    binomial(k,i) * binomial(k-i,j-i) * (k-2i+j)/(2n-j-k) * binomial(2n-j-k, n-i)
    on its support, 1 at the sawtooth cell (i, j, k) = (n, n, n) where the
    expression is indeterminate, and 0 everywhere else.
    """
    if (i, j, k) == (n, n, n) and n >= 0:
        return 1
    if not (0 <= i <= j <= k <= n) or j + k >= 2 * n:
        return 0
    numerator = (
        binomial(k, i)
        * binomial(k - i, j - i)
        * (k - 2 * i + j)
        * binomial(2 * n - j - k, n - i)
    )
    return _exact_div(numerator, 2 * n - j - k)


def munarini_term(n: int, j: int) -> int:
    """Low-peak-free Grand-Dyck paths of size n with j components above
    ground level: (3j+1)/(n+j+1) * binomial(2n-j, n-2j).
    """
    if j < 0 or n - 2 * j < 0:
        return 0
    return _exact_div((3 * j + 1) * binomial(2 * n - j, n - 2 * j), n + j + 1)


def irreducible_pairs_count(m: int) -> int:
    """Ordered pairs of compositions of m, equally many parts, no common
    proper prefix sum.  Equals the number of low-peak-free paths of size m-1.
    """
    if m < 1:
        return 0
    n = m - 1
    return sum(munarini_term(n, j) for j in range(n // 2 + 1))


def count_item3(n: int, j: int) -> int:
    """Grand-Dyck paths of size n with j components above ground level:
    (2j+1)/(2n+1) * binomial(2n+1, n-j).
    """
    if j < 0 or n - j < 0:
        return 0
    return _exact_div((2 * j + 1) * binomial(2 * n + 1, n - j), 2 * n + 1)


def count_item4(n: int, j: int, k: int) -> int:
    """Grand-Dyck paths of size n with j of its k components above ground
    level: the k-component Dyck count times binomial(k, j).
    """
    return dyck_components_count(n, k) * binomial(k, j)


def count_item5(n: int, j: int) -> int:
    """Grand-Dyck paths of size n with j big (semilength >= 2) components
    above ground level: (2j+1)/(n+1) * binomial(2n+2, n-2j).
    """
    if j < 0 or n - 2 * j < 0:
        return 0
    return _exact_div((2 * j + 1) * binomial(2 * n + 2, n - 2 * j), n + 1)


class IdentityCell(NamedTuple):
    """One (i, j, k) cell of the central binomial identity check."""

    i: int
    j: int
    k: int
    formula: int
    oracle: Optional[int]
    match: bool


class IdentityReport(NamedTuple):
    """Outcome of checking 1 + sum of u_count against binomial(2n, n)."""

    n: int
    lhs: int
    rhs: int
    cells: list[IdentityCell]

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs and all(c.match for c in self.cells)


def _identity_index_set(n: int) -> Iterator[tuple[int, int, int]]:
    """Cells 0 <= i <= j <= k <= n with j + k < 2n, the identity's index set."""
    for k in range(n + 1):
        for j in range(k + 1):
            if j + k >= 2 * n:
                continue
            for i in range(j + 1):
                yield i, j, k


def verify_identity(
    n: int, with_oracle: bool = False, cap: int = paths.ENUMERATION_CAP
) -> IdentityReport:
    """Check binomial(2n, n) == 1 + the triple sum of u_count over its index set.

    With ``with_oracle`` the report also compares u_count cell by cell, zeros
    included, against the exhaustive histogram of size-n paths.
    """
    rhs = 1 + sum(u_count(n, i, j, k) for i, j, k in _identity_index_set(n))
    lhs = binomial(2 * n, n)
    cells: list[IdentityCell] = []
    if with_oracle:
        hist = paths.histogram(n, cap)
        for k in range(n + 1):
            for j in range(k + 1):
                for i in range(j + 1):
                    formula = u_count(n, i, j, k)
                    oracle = hist.get((i, j, k), 0)
                    cells.append(
                        IdentityCell(i, j, k, formula, oracle, formula == oracle)
                    )
    return IdentityReport(n, lhs, rhs, cells)
