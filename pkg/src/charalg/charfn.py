"""Characteristic functions of linear maps between commutative algebras.

For a linear map f: A -> B and a in A, the characteristic function is the
formal series R(f,a,z) = exp(f(log(1+az))) = 1 + psi_1(a) z + psi_2(a) z^2 ...
The psi_k are Newton polynomials in the moments s_k = f(a^k) and can be built
by the classical recurrence

    psi_{k+1} = (s_1 psi_k - s_2 psi_{k-1} + s_3 psi_{k-2} - ...) / (k+1),

which only ever divides by integers, so everything stays exact over Q.  The
module also provides the symmetric multilinear forms Phi_k (polarizations of
k! psi_k, equivalently values of the Frobenius-style recursion), the finite
Berezinian sum for maps of polynomial type, and the reversed coefficients
psi*_k at infinity.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra import Element, invert, scalar_algebra
from .series import series_exp, series_log1p


class LinMap:
    """An exact matrix representing a linear (not multiplicative) map A -> B."""

    __slots__ = ("domain", "codomain", "matrix")

    def __init__(self, domain, codomain, matrix):
        self.domain = domain
        self.codomain = codomain
        self.matrix = tuple(tuple(Fraction(c) for c in row) for row in matrix)
        if len(self.matrix) != codomain.dim or any(
                len(r) != domain.dim for r in self.matrix):
            raise ValueError("matrix shape must be (dim codomain) x (dim domain)")

    def __call__(self, a):
        if a.algebra != self.domain:
            raise ValueError("element is not in the domain of the map")
        coords = tuple(sum((row[j] * a.coords[j]
                            for j in range(self.domain.dim) if a.coords[j]),
                           Fraction(0))
                       for row in self.matrix)
        return Element(self.codomain, coords)

    def apply(self, a):
        return self(a)

    def _check(self, other):
        if self.domain != other.domain or self.codomain != other.codomain:
            raise ValueError("maps have different domain or codomain")

    def __add__(self, other):
        self._check(other)
        return LinMap(self.domain, self.codomain,
                      (tuple(x + y for x, y in zip(r, s))
                       for r, s in zip(self.matrix, other.matrix)))

    def __sub__(self, other):
        self._check(other)
        return LinMap(self.domain, self.codomain,
                      (tuple(x - y for x, y in zip(r, s))
                       for r, s in zip(self.matrix, other.matrix)))

    def __rmul__(self, scalar):
        return LinMap(self.domain, self.codomain,
                      (tuple(x * scalar for x in r) for r in self.matrix))

    def compose(self, other):
        """self o other, for other: A -> B and self: B -> C."""
        if other.codomain != self.domain:
            raise ValueError("maps do not compose")
        rows = []
        for r in self.matrix:
            rows.append(tuple(sum((r[k] * other.matrix[k][j] for k in
                                   range(self.domain.dim) if r[k]), Fraction(0))
                              for j in range(other.domain.dim)))
        return LinMap(other.domain, self.codomain, rows)

    def __eq__(self, other):
        return (isinstance(other, LinMap) and self.domain == other.domain
                and self.codomain == other.codomain
                and self.matrix == other.matrix)

    def unit_image(self):
        """f(1_A), the chi of the map (an element of B)."""
        return self(self.domain.one())

    def __repr__(self):
        return "LinMap(%d -> %d)" % (self.domain.dim, self.codomain.dim)


def functional(domain, coeffs):
    """Linear functional A -> Q, handed as a row of rationals."""
    return LinMap(domain, scalar_algebra(), [coeffs])


def zero_map(domain, codomain):
    return LinMap(domain, codomain,
                  [[Fraction(0)] * domain.dim for _ in range(codomain.dim)])


@dataclass
class PsiTable:
    """psi_0 .. psi_N of one (map, element) pair; psi_0 is the unit of B."""

    map: LinMap
    element: Element
    values: tuple

    @property
    def order(self):
        return len(self.values) - 1

    def psi(self, k):
        """psi_k, with negative indices reading as 0 (no terms below z^0)."""
        if k < 0:
            return self.map.codomain.zero()
        if k > self.order:
            raise IndexError("psi table holds indices up to %d, asked for %d"
                             % (self.order, k))
        return self.values[k]


def newton_psi(f, a, upto):
    """Newton-recurrence table of psi_0..psi_upto for R(f,a,z)."""
    if upto < 0:
        raise ValueError("upto must be >= 0")
    B = f.codomain
    moments = [None]            # s_i = f(a^i), 1-based
    pw = a.algebra.one()
    for _ in range(upto):
        pw = pw * a
        moments.append(f(pw))
    values = [B.one()]
    for k in range(upto):
        acc = B.zero()
        for i in range(1, k + 2):
            term = moments[i] * values[k + 1 - i]
            acc = acc + term if i % 2 else acc - term
        values.append(acc / (k + 1))
    return PsiTable(f, a, tuple(values))


def char_series(f, a, order):
    """R(f,a,z) to the given order: exp of the termwise f-image of log(1+az)."""
    log_series = series_log1p(a, order)
    mapped = log_series.map_coeffs(f, f.codomain)
    return series_exp(mapped)


def phi_polar(f, args):
    """Symmetric multilinear Phi_k by polarization of k! psi_k:

    Phi_k(a_1..a_k) = sum over nonempty subsets S of (-1)^(k+|S|)
    psi_k(sum of the a_i, i in S).
    """
    k = len(args)
    if k < 1:
        raise ValueError("phi needs at least one argument")
    total = f.codomain.zero()
    for r in range(1, k + 1):
        for idx in combinations(range(k), r):
            s = args[idx[0]]
            for i in idx[1:]:
                s = s + args[i]
            val = newton_psi(f, s, k).values[k]
            total = total + val if (k + r) % 2 == 0 else total - val
    return total


def phi_frobenius(f, args):
    """Phi_k by the multiplicative recursion

    Phi_{k+1}(a_1..a_{k+1}) = Phi_k(a_1..a_k) f(a_{k+1})
                              - sum_i Phi_k(a_1, .., a_i a_{k+1}, .., a_k)

    starting from Phi_1 = f.  Agrees with phi_polar (cross-checked in tests).
    """
    if len(args) < 1:
        raise ValueError("phi needs at least one argument")
    if len(args) == 1:
        return f(args[0])
    head, last = list(args[:-1]), args[-1]
    total = phi_frobenius(f, head) * f(last)
    for i in range(len(head)):
        modified = head[:i] + [head[i] * last] + head[i + 1:]
        total = total - phi_frobenius(f, modified)
    return total


@dataclass
class CombinedHom:
    """Integer combination of algebra homomorphisms with its type metadata."""

    map: LinMap
    chi: int
    p: int
    q: int


def combine_homs(parts):
    """sum n_alpha f_alpha with chi = sum n, p = sum of positive n,
    q = -(sum of negative n)."""
    if not parts:
        raise ValueError("need at least one (n, map) pair")
    _, first = parts[0]
    total = zero_map(first.domain, first.codomain)
    chi = p = q = 0
    for n, f in parts:
        total = total + n * f
        chi += n
        if n > 0:
            p += n
        else:
            q -= n
    return CombinedHom(total, chi, p, q)


def berezinian_nhom(f, a, n):
    """Finite Berezinian sum 1 + psi_1(a-1) + ... + psi_n(a-1).

    Equals psi_n(a) whenever f is an n-homomorphism; defined for every a
    (no inversion involved).
    """
    shifted = a - a.algebra.one()
    table = newton_psi(f, shifted, n)
    total = f.codomain.zero()
    for v in table.values:
        total = total + v
    return total


def psi_star(f, a, k, chi):
    """Coefficient psi*_k of the expansion at infinity: ber * psi_{chi-k}(1/a).

    For an n-homomorphism with chi = n this reverses the polynomial:
    psi*_k = psi_k(a).  Requires a invertible.
    """
    if not 0 <= k <= chi:
        raise ValueError("need 0 <= k <= chi")
    ber = berezinian_nhom(f, a, chi)
    ainv = invert(a)
    tail = newton_psi(f, ainv, chi - k).values[chi - k]
    return ber * tail
