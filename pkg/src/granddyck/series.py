"""Exact truncated power series in x with polynomial coefficients in y, z, w.

The three markers track the path statistics: y the low peaks, z the
components above ground level, w the components altogether.  Coefficients of
x^n are sparse polynomials over exact rationals (inverting a series divides
by its constant term); every series the library exposes ends up with
nonnegative integer coefficients, and the JSON serializer enforces that.

Truncation order is explicit: combining series of different orders is an
error, never a silent min.
"""

from collections.abc import Iterable
from fractions import Fraction
from numbers import Rational

from .counting import catalan
from .errors import NonUnitConstantTermError, OrderMismatchError

Exponents = tuple[int, int, int]

KEEP = "keep"  # sentinel accepted by specialize() to leave a marker symbolic


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class MultiPoly:
    """Sparse polynomial in the markers y, z, w with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable | dict | None = None):
        clean: dict[Exponents, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exps, coeff in items:
                ey, ez, ew = (int(e) for e in exps)
                if ey < 0 or ez < 0 or ew < 0:
                    raise ValueError(f"negative exponent in {exps}")
                c = clean.get((ey, ez, ew), Fraction(0)) + _as_fraction(coeff)
                if c:
                    clean[(ey, ez, ew)] = c
                else:
                    clean.pop((ey, ez, ew), None)
        self.terms = clean

    @classmethod
    def const(cls, value) -> "MultiPoly":
        return cls({(0, 0, 0): _as_fraction(value)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(e == (0, 0, 0) for e in self.terms)

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial (the coefficient of y^0 z^0 w^0)."""
        if not self.is_constant():
            raise ValueError(f"{self!r} is not constant")
        return self.terms.get((0, 0, 0), Fraction(0))

    def __add__(self, other) -> "MultiPoly":
        other = _as_poly(other)
        merged = dict(self.terms)
        for e, c in other.terms.items():
            s = merged.get(e, Fraction(0)) + c
            if s:
                merged[e] = s
            else:
                merged.pop(e, None)
        out = MultiPoly()
        out.terms = merged
        return out

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        out = MultiPoly()
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other) -> "MultiPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "MultiPoly":
        return _as_poly(other) + (-self)

    def __mul__(self, other) -> "MultiPoly":
        other = _as_poly(other)
        product: dict[Exponents, Fraction] = {}
        for (ay, az, aw), ac in self.terms.items():
            for (by, bz, bw), bc in other.terms.items():
                e = (ay + by, az + bz, aw + bw)
                s = product.get(e, Fraction(0)) + ac * bc
                if s:
                    product[e] = s
                else:
                    product.pop(e, None)
        out = MultiPoly()
        out.terms = product
        return out

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        try:
            other = _as_poly(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def substitute(self, y=None, z=None, w=None) -> "MultiPoly":
        """Evaluate some markers at exact rationals; None keeps one symbolic."""
        values = (y, z, w)
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            new_exps = list(exps)
            for axis, val in enumerate(values):
                if val is None:
                    continue
                coeff = coeff * _as_fraction(val) ** exps[axis]
                new_exps[axis] = 0
            if coeff:
                e = tuple(new_exps)
                s = out.get(e, Fraction(0)) + coeff
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        result = MultiPoly()
        result.terms = out
        return result

    def integer_terms(self) -> dict[Exponents, int]:
        """Terms with integer coefficients; raises if any denominator is not 1."""
        out = {}
        for e, c in sorted(self.terms.items()):
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c} at exponents {e}")
            out[e] = c.numerator
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (ey, ez, ew), c in sorted(self.terms.items()):
            factors = []
            for name, e in (("y", ey), ("z", ez), ("w", ew)):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if c != 1 or not factors:
                factors.insert(0, str(c))
            pieces.append("*".join(factors))
        return " + ".join(pieces)


def _as_poly(value) -> MultiPoly:
    if isinstance(value, MultiPoly):
        return value
    return MultiPoly.const(_as_fraction(value))


ZERO = MultiPoly()
ONE = MultiPoly.const(1)
Y = MultiPoly({(1, 0, 0): 1})
Z = MultiPoly({(0, 1, 0): 1})
W = MultiPoly({(0, 0, 1): 1})


class TruncatedSeries:
    """Power series in x kept exactly through x^order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        cs = [_as_poly(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError(f"{len(cs)} coefficients exceed order {order}")
        cs.extend([ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    def coefficient(self, m: int) -> MultiPoly:
        """Coefficient of x^m (m must not exceed the truncation order)."""
        if not 0 <= m <= self.order:
            raise IndexError(f"x^{m} is outside truncation order {self.order}")
        return self.coeffs[m]

    def scaled(self, factor) -> "TruncatedSeries":
        f = _as_poly(factor)
        return TruncatedSeries(self.order, [c * f for c in self.coeffs])

    def x_shift(self, k: int = 1) -> "TruncatedSeries":
        """Multiply by x^k, truncating whatever falls past the order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return TruncatedSeries(self.order, [ZERO] * k + list(self.coeffs[: self.order + 1 - k]))

    def __add__(self, other) -> "TruncatedSeries":
        return series_add(self, other)

    def __sub__(self, other) -> "TruncatedSeries":
        return series_add(self, other.scaled(-1))

    def __mul__(self, other) -> "TruncatedSeries":
        return series_mul(self, other)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(f"x^{m}: {c!r}" for m, c in enumerate(self.coeffs[:4]))
        tail = ", ..." if self.order >= 4 else ""
        return f"TruncatedSeries(order={self.order}, {head}{tail})"


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise sum of two series of the same order."""
    _check_orders(a, b)
    return TruncatedSeries(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    out = []
    for m in range(a.order + 1):
        acc = ZERO
        for t in range(m + 1):
            if a.coeffs[t] and b.coeffs[m - t]:
                acc = acc + a.coeffs[t] * b.coeffs[m - t]
        out.append(acc)
    return TruncatedSeries(a.order, out)


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series whose constant term is a nonzero
    constant, via the usual convolution recurrence.
    """
    c0 = a.coeffs[0]
    if not c0.is_constant() or c0.constant_value() == 0:
        raise NonUnitConstantTermError(
            f"constant term {c0!r} is not an invertible constant"
        )
    inv0 = 1 / c0.constant_value()
    out = [MultiPoly.const(inv0)]
    for m in range(1, a.order + 1):
        acc = ZERO
        for t in range(1, m + 1):
            if a.coeffs[t]:
                acc = acc + a.coeffs[t] * out[m - t]
        out.append(acc * (-inv0))
    return TruncatedSeries(a.order, out)


def catalan_series(order: int) -> TruncatedSeries:
    """Generating function for Dyck paths by size: coefficients are the
    Catalan numbers."""
    return TruncatedSeries(order, [catalan(m) for m in range(order + 1)])


def sqrt_one_minus_4x(order: int) -> TruncatedSeries:
    """The square root of 1 - 4x as a series: 1 - 2x * C(x) with C the
    Catalan series, so the coefficient of x^m is -2 * catalan(m-1) for m >= 1.
    All coefficients are integers; squaring gives back 1 - 4x exactly.
    """
    coeffs = [Fraction(1)] + [-2 * catalan(m - 1) for m in range(1, order + 1)]
    return TruncatedSeries(order, coeffs)


def expand_F(order: int) -> TruncatedSeries:
    """Joint generating function for Grand-Dyck paths: x marks size, y low
    peaks, z components above ground level, w components altogether.

    Built as 2 / (2 + 2wxz(1-y) - w(1+z)(1 - sqrt(1-4x))); the coefficient of
    x^n y^i z^j w^k is the number of size-n paths with statistics (i, j, k).
    """
    denom = [MultiPoly.const(2)]
    for m in range(1, order + 1):
        c = -2 * catalan(m - 1) * (W + Z * W)  # from -w(1+z)(1 - sqrt(1-4x))
        if m == 1:
            c = c + 2 * (Z * W - Y * Z * W)  # from 2wxz(1-y)
        denom.append(c)
    return series_reciprocal(TruncatedSeries(order, denom)).scaled(2)


def expand_no_low_peaks(order: int) -> TruncatedSeries:
    """Series counting low-peak-free Grand-Dyck paths by size:
    1 / (x + sqrt(1-4x))."""
    denom = [Fraction(1), Fraction(-1)]
    denom += [Fraction(-2 * catalan(m - 1)) for m in range(2, order + 1)]
    return series_reciprocal(TruncatedSeries(order, denom[: order + 1]))


def expand_comps_above(order: int) -> TruncatedSeries:
    """Series counting Grand-Dyck paths by size and components above ground
    level: 2 / ((z+1) sqrt(1-4x) - z + 1), with z the marker."""
    denom = [MultiPoly.const(2)]  # (z+1)*1 - z + 1
    for m in range(1, order + 1):
        denom.append(-2 * catalan(m - 1) * (Z + ONE))
    return series_reciprocal(TruncatedSeries(order, denom)).scaled(2)


def expand_irreducible_gf(order: int) -> TruncatedSeries:
    """Series whose x^n coefficient counts irreducible ordered pairs of
    compositions of n+1; identical to expand_no_low_peaks by construction.
    """
    return expand_no_low_peaks(order)


def specialize(s: TruncatedSeries, y_val, z_val, w_val) -> TruncatedSeries:
    """Substitute exact rationals for markers; pass KEEP (or None) to leave
    one symbolic."""

    def resolve(v):
        return None if v is None or (isinstance(v, str) and v == KEEP) else v

    y, z, w = resolve(y_val), resolve(z_val), resolve(w_val)
    return TruncatedSeries(s.order, [c.substitute(y=y, z=z, w=w) for c in s.coeffs])


def series_records(s: TruncatedSeries) -> list[dict]:
    """JSON-ready records, one per x-degree, with integer decimal-string
    coefficients; raises ValueError if any coefficient is not an integer."""
    records = []
    for m, poly in enumerate(s.coeffs):
        terms = [
            {"y": ey, "z": ez, "w": ew, "coeff": str(c)}
            for (ey, ez, ew), c in sorted(poly.integer_terms().items())
        ]
        records.append({"x": m, "terms": terms})
    return records
