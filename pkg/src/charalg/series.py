"""Truncated power series and polynomials over an exact commutative carrier.

A *carrier* is anything with ``zero()`` and ``one()`` returning coefficient
values that support +, -, * among themselves, multiplication by int/Fraction
scalars, and exact division by nonzero integers.  Two carriers ship with the
package: the rational field ``QQ`` below (values are Fractions) and any
``AlgebraSpec`` (values are its Elements).

Truncation orders are always explicit; no operation extends or shrinks a
series silently, and every equality test is exact coefficient-wise equality.
"""

from fractions import Fraction


class _RationalField:
    """The ground field as a carrier: coefficients are Fractions."""

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, _RationalField)

    def __hash__(self):
        return hash("charalg.QQ")


QQ = _RationalField()


def carrier_of(value):
    if isinstance(value, (Fraction, int)):
        return QQ
    return value.algebra


class TruncSeries:
    """Coefficients c[0..N] of z^0..z^N, all in one carrier."""

    __slots__ = ("carrier", "coeffs")

    def __init__(self, carrier, coeffs):
        self.carrier = carrier
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the z^0 term")

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        return (isinstance(other, TruncSeries) and self.carrier == other.carrier
                and self.coeffs == other.coeffs)

    def _check(self, other):
        if self.carrier != other.carrier:
            raise ValueError("series carrier mismatch")
        if self.order != other.order:
            raise ValueError("series order mismatch: %d vs %d"
                             % (self.order, other.order))

    def __add__(self, other):
        self._check(other)
        return TruncSeries(self.carrier,
                           (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        self._check(other)
        return TruncSeries(self.carrier,
                           (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return TruncSeries(self.carrier, (-a for a in self.coeffs))

    def __mul__(self, other):
        return series_mul(self, other)

    def scale(self, scalar):
        return TruncSeries(self.carrier, (c * scalar for c in self.coeffs))

    def map_coeffs(self, fn, carrier):
        """Termwise image of the coefficients, landing in another carrier."""
        return TruncSeries(carrier, (fn(c) for c in self.coeffs))

    def __repr__(self):
        return "TruncSeries(%r, %s)" % (self.carrier, list(self.coeffs))


def series_one(carrier, order):
    z = carrier.zero()
    return TruncSeries(carrier, [carrier.one()] + [z] * order)


def series_add(s, t):
    return s + t


def series_mul(s, t):
    """Cauchy product truncated at the common order."""
    s._check(t)
    n = s.order
    zero = s.carrier.zero()
    out = []
    for k in range(n + 1):
        acc = zero
        for i in range(k + 1):
            a, b = s.coeffs[i], t.coeffs[k - i]
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return TruncSeries(s.carrier, out)


def series_exp(s):
    """exp of a series with zero constant term, same truncation order.

    Uses the derivative recurrence E' = s'E, so the only divisions are by the
    integers 1..N; exact over any carrier that is a Q-algebra.
    """
    if s.coeffs[0] != s.carrier.zero():
        raise ValueError("series_exp needs a zero constant term")
    n = s.order
    zero = s.carrier.zero()
    out = [s.carrier.one()]
    for k in range(n):
        acc = zero
        for j in range(k + 1):
            c = s.coeffs[j + 1]
            if c:
                acc = acc + (c * (j + 1)) * out[k - j]
        out.append(acc / (k + 1))
    return TruncSeries(s.carrier, out)


def series_log1p(a, order, carrier=None):
    """The series log(1 + a z) = a z - a^2 z^2 / 2 + a^3 z^3 / 3 - ..."""
    if order < 0:
        raise ValueError("order must be >= 0")
    if carrier is None:
        carrier = carrier_of(a)
    if isinstance(a, int):
        a = Fraction(a)
    coeffs = [carrier.zero()]
    power = carrier.one()
    for k in range(1, order + 1):
        power = power * a
        term = power / k
        coeffs.append(term if k % 2 else -term)
    return TruncSeries(carrier, coeffs)


class Poly:
    """Polynomial over a carrier, stored with no trailing zero coefficients."""

    __slots__ = ("carrier", "coeffs")

    def __init__(self, carrier, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.carrier = carrier
        self.coeffs = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1       # -1 for the zero polynomial

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.carrier.zero()

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.carrier == other.carrier
                and self.coeffs == other.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.carrier,
                    (self.coeff(k) + other.coeff(k) for k in range(n)))

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.carrier,
                    (self.coeff(k) - other.coeff(k) for k in range(n)))

    def __neg__(self):
        return Poly(self.carrier, (-c for c in self.coeffs))

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return Poly(self.carrier, [])
        zero = self.carrier.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Poly(self.carrier, out)

    def __call__(self, point):
        """Evaluate by Horner's rule at a carrier value."""
        acc = self.carrier.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def as_series(self, order):
        if self.degree > order:
            raise ValueError("polynomial degree exceeds truncation order")
        zero = self.carrier.zero()
        return TruncSeries(self.carrier,
                           [self.coeff(k) for k in range(order + 1)])

    def __repr__(self):
        return "Poly(%r, %s)" % (self.carrier, list(self.coeffs))


def poly_series_match(p, q, s):
    """True iff q*s == p modulo z^(N+1), i.e. s expands p/q to order N."""
    if p.carrier != s.carrier or q.carrier != s.carrier:
        raise ValueError("carrier mismatch")
    if p.degree + q.degree > s.order:
        raise ValueError("need deg p + deg q <= series order")
    lhs = series_mul(q.as_series(s.order), s)
    return lhs == p.as_series(s.order)


def poly_divmod(a, b):
    """Quotient and remainder over the rational field."""
    if a.carrier != QQ or b.carrier != QQ:
        raise ValueError("poly_divmod works over QQ only")
    if b.degree < 0:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coeffs)
    quot = [Fraction(0)] * max(0, len(rem) - len(b.coeffs) + 1)
    lead = b.coeffs[-1]
    for k in range(len(rem) - len(b.coeffs), -1, -1):
        c = rem[k + b.degree] / lead
        if c:
            quot[k] = c
            for j, bc in enumerate(b.coeffs):
                rem[k + j] -= c * bc
    return Poly(QQ, quot), Poly(QQ, rem)


def poly_gcd(a, b):
    """Monic gcd over the rational field by the Euclidean algorithm."""
    while b.degree >= 0:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a.degree >= 0:
        lead = a.coeffs[-1]
        a = Poly(QQ, (c / lead for c in a.coeffs))
    return a
