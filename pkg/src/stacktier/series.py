"""
Exact truncated power series over the rationals, and the nested-radical
tower that generates the tier triangle.

A RationalSeries holds coefficients c_0..c_N as Fractions; every
operation is exact modulo u^(N+1).  No floating point enters anywhere.

The tier generating function lives in the single variable u = z(1 - w):
with psi_0 = 1 - 2u, psi_1 = sqrt(1 - 4u) and psi_j = sqrt(2 psi_{j-1} - 1),
the counts come out of g_j(u) = (psi_j - psi_{j+1}) / (2u) via

    T(n, t) = sum_{j=0}^{t} (-1)^(t-j) C(n, t-j) [u^n] g_j,

which is the w-extraction of sum_j w^j g_j(z(1-w)).  The extraction is
validated against the insertion recurrence in the test suite before
anything trusts it.
"""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Sequence

_ZERO = Fraction(0)
_ONE = Fraction(1)

DEFAULT_ORDER = 32


@dataclasses.dataclass(frozen=True)
class RationalSeries:
    """Power series truncated at u^order, exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")

    @classmethod
    def from_list(cls, values: Sequence, order: int) -> "RationalSeries":
        cs = [Fraction(v) for v in values[: order + 1]]
        cs += [_ZERO] * (order + 1 - len(cs))
        return cls(tuple(cs))

    @classmethod
    def zero(cls, order: int) -> "RationalSeries":
        return cls.from_list([], order)

    @classmethod
    def one(cls, order: int) -> "RationalSeries":
        return cls.from_list([1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        if k > self.order:
            raise ValueError(f"coefficient {k} beyond truncation order {self.order}")
        return self.coeffs[k]

    def truncate(self, order: int) -> "RationalSeries":
        if order >= self.order:
            return RationalSeries.from_list(self.coeffs, order)
        return RationalSeries(self.coeffs[: order + 1])

    def __add__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order)
        return RationalSeries(
            tuple(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))
        )

    def __sub__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order)
        return RationalSeries(
            tuple(a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs[: n + 1]))
        )

    def __neg__(self) -> "RationalSeries":
        return RationalSeries(tuple(-a for a in self.coeffs))

    def scale(self, factor) -> "RationalSeries":
        f = Fraction(factor)
        return RationalSeries(tuple(a * f for a in self.coeffs))

    def add_constant(self, value) -> "RationalSeries":
        v = Fraction(value)
        return RationalSeries((self.coeffs[0] + v,) + self.coeffs[1:])

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        n = min(self.order, other.order)
        out = [_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return RationalSeries(tuple(out))

    def __truediv__(self, other: "RationalSeries") -> "RationalSeries":
        if other.coeffs[0] == 0:
            raise ValueError("division requires a unit constant term")
        n = min(self.order, other.order)
        inv0 = 1 / other.coeffs[0]
        out = [_ZERO] * (n + 1)
        for k in range(n + 1):
            acc = self.coeffs[k]
            for i in range(1, k + 1):
                b = other.coeffs[i]
                if b:
                    acc -= b * out[k - i]
            out[k] = acc * inv0
        return RationalSeries(tuple(out))

    def shift_down(self, k: int = 1) -> "RationalSeries":
        """Exact division by u^k; the low-order coefficients must vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError(f"series is not divisible by u^{k}")
        return RationalSeries(self.coeffs[k:])

    def shift_up(self, k: int = 1) -> "RationalSeries":
        """Multiplication by u^k, keeping the truncation order."""
        return RationalSeries(((_ZERO,) * k + self.coeffs)[: self.order + 1])

    def compose(self, inner: "RationalSeries") -> "RationalSeries":
        """self(inner(u)); inner must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires zero constant term")
        n = min(self.order, inner.order)
        result = RationalSeries.zero(n)
        power = RationalSeries.one(n)
        trimmed = inner.truncate(n)
        for k, c in enumerate(self.coeffs[: n + 1]):
            if c:
                result = result + power.scale(c)
            if k < n:
                power = power * trimmed
        return result

    def sqrt(self) -> "RationalSeries":
        """Square root with constant term 1, by Newton iteration.

        Each step r -> (r + s/r)/2 doubles the number of correct
        coefficients, so the loop runs O(log order) times.
        """
        if self.coeffs[0] != 1:
            raise ValueError("sqrt requires constant term 1")
        n = self.order
        r = RationalSeries.one(0)
        correct = 0
        while correct < n:
            correct = min(2 * correct + 1, n)
            s = self.truncate(correct)
            r = (r.truncate(correct) + s / r.truncate(correct)).scale(Fraction(1, 2))
        return r

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c} * z^{k}")
        return " + ".join(terms) if terms else "0"


def catalan_series(order: int) -> RationalSeries:
    """(1 - sqrt(1 - 4z)) / (2z): coefficients 1, 1, 2, 5, 14, 42, ...

    >>> catalan_series(5).coefficient(5)
    Fraction(42, 1)
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    root = RationalSeries.from_list([1, -4], order + 1).sqrt()
    return (-root).add_constant(1).shift_down(1).scale(Fraction(1, 2))


def psi_tower(levels: int, order: int) -> list[RationalSeries]:
    """The nested radicals psi_0..psi_levels as series in u = z(1 - w).

    psi_0 = 1 - 2u, psi_1 = sqrt(1 - 4u), psi_j = sqrt(2 psi_{j-1} - 1).
    """
    if levels < 1:
        raise ValueError("need at least one level")
    tower = [RationalSeries.from_list([1, -2], order)]
    psi = RationalSeries.from_list([1, -4], order).sqrt()
    tower.append(psi)
    for _ in range(2, levels + 1):
        psi = psi.scale(2).add_constant(-1).sqrt()
        tower.append(psi)
    return tower


def _level_series(tower: Sequence[RationalSeries], j: int) -> RationalSeries:
    # g_j(u) = (psi_j - psi_{j+1}) / (2u); both constants are 1 so the
    # numerator is divisible by u
    return (tower[j] - tower[j + 1]).shift_down(1).scale(Fraction(1, 2))


def t_coefficient(n: int, t: int, order: int | None = None) -> int:
    """Exact count of length-n permutations of tier t via series extraction."""
    if n < 1:
        raise ValueError("length must be positive")
    if t < 0:
        raise ValueError("tier must be nonnegative")
    if order is None:
        order = n
    if order < n:
        raise ValueError(f"truncation order {order} too small for length {n}")
    tower = psi_tower(t + 1, order + 1)
    return _extract(tower, n, t)


def _extract(tower: Sequence[RationalSeries], n: int, t: int) -> int:
    total = _ZERO
    for j in range(t + 1):
        g_jn = _level_series(tower, j).coefficient(n)
        total += Fraction((-1) ** (t - j) * math.comb(n, t - j)) * g_jn
    if total.denominator != 1:
        raise AssertionError(f"non-integer count at (n={n}, t={t}): {total}")
    return int(total)


def t_series(t: int, order: int) -> list[int]:
    """Coefficients of T_t(z) for n = 0..order (T(0, t) = 0 by convention)."""
    if t < 0:
        raise ValueError("tier must be nonnegative")
    if order < 1:
        raise ValueError("order must be at least 1")
    tower = psi_tower(t + 1, order + 1)
    return [0] + [_extract(tower, n, t) for n in range(1, order + 1)]


def t1_closed_form(order: int) -> RationalSeries:
    """(1 - sqrt(2 sqrt(1-4z) - 1)) / (2z) - 1/sqrt(1-4z)."""
    root = RationalSeries.from_list([1, -4], order + 1).sqrt()
    inner = root.scale(2).add_constant(-1).sqrt()
    head = (-inner).add_constant(1).shift_down(1).scale(Fraction(1, 2))
    tail = RationalSeries.one(order) / root.truncate(order)
    return head - tail


def t2_closed_form(order: int) -> RationalSeries:
    """(1 - sqrt(2 sqrt(2 sqrt(1-4z) - 1) - 1)) / (2z)
    + z / sqrt(1-4z)^3 - 1 / (sqrt(1-4z) sqrt(2 sqrt(1-4z) - 1))."""
    root = RationalSeries.from_list([1, -4], order + 1).sqrt()
    lvl2 = root.scale(2).add_constant(-1).sqrt()
    lvl3 = lvl2.scale(2).add_constant(-1).sqrt()
    head = (-lvl3).add_constant(1).shift_down(1).scale(Fraction(1, 2))
    root_n = root.truncate(order)
    lvl2_n = lvl2.truncate(order)
    one = RationalSeries.one(order)
    mid = (one / (root_n * root_n * root_n)).shift_up(1)
    tail = one / (root_n * lvl2_n)
    return head + mid - tail


def format_series_terms(coeffs: Sequence, skip_zero: bool = True) -> list[str]:
    """One `c * z^k` line per coefficient, exact rationals as num/den."""
    lines = []
    for k, c in enumerate(coeffs):
        if skip_zero and c == 0:
            continue
        frac = Fraction(c)
        text = str(frac.numerator) if frac.denominator == 1 else f"{frac.numerator}/{frac.denominator}"
        lines.append(f"{text} * z^{k}")
    return lines
