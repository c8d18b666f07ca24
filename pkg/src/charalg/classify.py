"""Deciding whether a linear map has polynomial or rational characteristic
function: n-homomorphism checks, Hankel determinants, Pade reconstruction and
the rational Berezinian.

The n-homomorphism test is complete: Phi_{n+1} is symmetric and multilinear,
so vanishing on every multiset of basis elements forces vanishing everywhere.
The p|q Hankel test quantifies over all of A, which sampling cannot decide;
the policy below (basis elements, pairwise basis sums, seeded pseudo-random
vectors) is therefore reported as "pass (sampled)" by the CLI, never as a
proof.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from .algebra import as_rational, scalar_algebra
from .charfn import newton_psi, phi_polar, char_series
from .linalg import det_ring, solve
from .series import Poly, QQ, TruncSeries, poly_divmod, poly_gcd, poly_series_match


class NoSolution(Exception):
    """Pade reconstruction failed: the series is not of the requested type."""


@dataclass(frozen=True)
class SamplingPolicy:
    """How "for all a" is approximated: which elements get tested."""

    samples: int = 16
    seed: int = 0

    def sample_elements(self, algebra):
        out = list(algebra.basis())
        basis = algebra.basis()
        for i, j in combinations(range(algebra.dim), 2):
            out.append(basis[i] + basis[j])
        for s in range(self.samples):
            rng = random.Random("%d:%d" % (self.seed, s))
            out.append(algebra.element(
                [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                 for _ in range(algebra.dim)]))
        return out

    def as_json(self):
        return {"samples": self.samples, "seed": self.seed,
                "base": "basis + pairwise basis sums"}


@dataclass
class CheckResult:
    passed: bool
    witness: dict | None = None
    mode: str = "exhaustive"          # "exhaustive" or "sampled"
    policy: dict | None = None

    def __bool__(self):
        return self.passed


@dataclass
class HomClass:
    """Classification verdict: Polynomial(n), RationalPQ(p, q) or
    Undetermined(search bound)."""

    kind: str
    n: int | None = None
    p: int | None = None
    q: int | None = None
    bound: int | None = None
    witness: dict | None = None

    @classmethod
    def polynomial(cls, n):
        return cls("polynomial", n=n)

    @classmethod
    def rational_pq(cls, p, q):
        return cls("rational", p=p, q=q)

    @classmethod
    def undetermined(cls, bound, witness=None):
        return cls("undetermined", bound=bound, witness=witness)

    @property
    def verdict(self):
        if self.kind == "polynomial":
            return "Polynomial(%d)" % self.n
        if self.kind == "rational":
            return "RationalPQ(%d,%d)" % (self.p, self.q)
        return "Undetermined(%d)" % self.bound


def integral_chi(f):
    """f(1) as an integer multiple of 1_B, or None if it is not one."""
    v = f.unit_image()
    unit = f.codomain.unit
    j = next(i for i, u in enumerate(unit) if u)
    chi = v.coords[j] / unit[j]
    if chi.denominator != 1:
        return None
    if v.coords != tuple(chi * u for u in unit):
        return None
    return int(chi)


def _element_json(a):
    return [str(c) for c in a.coords]


def check_n_hom(f, n):
    """Exact n-homomorphism test: f(1) = n 1_B and Phi_{n+1} = 0.

    Multilinearity plus symmetry make basis multisets sufficient, so a pass
    here is a proof, not a sampled verdict.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    expected = n * f.codomain.one()
    if f.unit_image() != expected:
        return CheckResult(False, {
            "kind": "unit", "f(1)": _element_json(f.unit_image()),
            "required": _element_json(expected)})
    basis = f.domain.basis()
    for idx in combinations_with_replacement(range(f.domain.dim), n + 1):
        val = phi_polar(f, [basis[i] for i in idx])
        if val:
            return CheckResult(False, {
                "kind": "phi", "indices": list(idx), "k": n + 1,
                "value": _element_json(val)})
    return CheckResult(True)


def detect_poly_degree(f, max_n):
    """Smallest n <= max_n passing check_n_hom, else Undetermined(max_n).

    f(1) = n 1_B is part of the n-homomorphism equations, so at most one n
    can pass; non-integral f(1) short-circuits before any Phi work.
    """
    if max_n < 0:
        raise ValueError("max_n must be >= 0")
    chi = integral_chi(f)
    if chi is None:
        return HomClass.undetermined(max_n, {
            "kind": "unit", "reason": "f(1) is not an integer multiple of 1",
            "f(1)": _element_json(f.unit_image())})
    if chi < 0 or chi > max_n:
        return HomClass.undetermined(max_n, {
            "kind": "chi-out-of-range", "chi": chi})
    res = check_n_hom(f, chi)
    if res.passed:
        return HomClass.polynomial(chi)
    return HomClass.undetermined(max_n, res.witness)


def hankel_det(psis, k, q):
    """Determinant of the (q+1)x(q+1) matrix H[i][j] = psi_{k+i+j}.

    psi of negative index is 0 (the series has no terms below z^0); the table
    must reach index k+2q.  Division free, so valid over codomains with zero
    divisors.
    """
    if q < 0:
        raise ValueError("q must be >= 0")
    if k + 2 * q > psis.order:
        raise ValueError("psi table too shallow: need index %d, have %d"
                         % (k + 2 * q, psis.order))
    B = psis.map.codomain
    rows = [[psis.psi(k + i + j) for j in range(q + 1)] for i in range(q + 1)]
    return det_ring(rows, B.zero(), B.one())


def check_pq_hom(f, p, q, k_max, policy=None):
    """Sampled p|q-homomorphism test: f(1) = (p-q) 1_B and the Hankel
    determinants of size q+1 vanish for k in [p-q+1, k_max] on every sample."""
    if p < 0 or q < 0:
        raise ValueError("p and q must be >= 0")
    if k_max < p - q + 1:
        raise ValueError("k_max must be at least p - q + 1")
    policy = policy or SamplingPolicy()
    expected = (p - q) * f.codomain.one()
    if f.unit_image() != expected:
        return CheckResult(False, {
            "kind": "unit", "f(1)": _element_json(f.unit_image()),
            "required": _element_json(expected)},
            mode="sampled", policy=policy.as_json())
    depth = k_max + 2 * q
    for a in policy.sample_elements(f.domain):
        psis = newton_psi(f, a, depth)
        for k in range(p - q + 1, k_max + 1):
            if hankel_det(psis, k, q):
                return CheckResult(False, {
                    "kind": "hankel", "element": _element_json(a), "k": k},
                    mode="sampled", policy=policy.as_json())
    return CheckResult(True, mode="sampled", policy=policy.as_json())


@dataclass
class PolyFrac:
    """Verified rational form P/Q of a series; Q(0) = 1."""

    numerator: Poly
    denominator: Poly

    def reduced(self):
        g = poly_gcd(self.numerator, self.denominator)
        if g.degree < 1:
            return self
        num, _ = _poly_div_exact(self.numerator, g)
        den, _ = _poly_div_exact(self.denominator, g)
        c = den.coeff(0)
        if c:                       # keep the Q(0) = 1 normalization
            num = Poly(QQ, (x / c for x in num.coeffs))
            den = Poly(QQ, (x / c for x in den.coeffs))
        return PolyFrac(num, den)

    def eval_at_one(self):
        one = Fraction(1)
        return self.numerator(one), self.denominator(one)


def _poly_div_exact(a, b):
    from .series import poly_divmod
    return poly_divmod(a, b)


def pade_reconstruct(coeffs, p, q):
    """Rational reconstruction of a series: find P (deg <= p) and Q (deg <= q,
    Q(0) = 1) with Q * series = P through order N = len(coeffs) - 1.

    Raises NoSolution when the linear system is inconsistent or the verifying
    cross-multiplication fails.
    """
    coeffs = [Fraction(c) for c in coeffs]
    n = len(coeffs) - 1
    if n < p + q:
        raise ValueError("need at least p + q + 1 coefficients")

    def c(i):
        return coeffs[i] if i >= 0 else Fraction(0)

    # unknown denominator b_1..b_q from the linear conditions at orders p+1..N
    if q > 0:
        rows = [tuple(c(k - j) for j in range(1, q + 1))
                for k in range(p + 1, n + 1)]
        rhs = [-c(k) for k in range(p + 1, n + 1)]
        from .linalg import solve
        sol = solve(rows, rhs)
        if sol is None:
            raise NoSolution("no denominator of degree <= %d matches" % q)
        den = Poly(QQ, [Fraction(1)] + list(sol))
    else:
        den = Poly(QQ, [Fraction(1)])
    num = Poly(QQ, [sum(den.coeff(j) * c(i - j) for j in range(0, q + 1))
                    for i in range(0, p + 1)])
    series = Poly(QQ, coeffs).as_series(n) if len(coeffs) == n + 1 else None
    from .series import TruncSeries
    series = TruncSeries(QQ, coeffs)
    if not poly_series_match(num, den, series):
        raise NoSolution("reconstruction failed cross-multiplication check")
    return PolyFrac(num, den)


def berezinian_rational(f, a, p, q, order):
    """ber(f, a) for a scalar-valued map of rational type p|q.

    Reconstructs R(f, a-1, z) as P/Q and evaluates the reduced fraction at
    z = 1, which is exp(f(log a)).  ZeroDivisionError if z = 1 is a genuine
    pole (a not invertible enough); NoSolution propagates from the
    reconstruction.
    """
    if f.codomain != scalar_algebra():
        raise ValueError("rational Berezinian needs a scalar codomain")
    if order < p + q:
        raise ValueError("order must be at least p + q")
    shifted = a - a.algebra.one()
    series = char_series(f, shifted, order)
    coeffs = [as_rational(cf) for cf in series.coeffs]
    frac = pade_reconstruct(coeffs, p, q).reduced()
    num1, den1 = frac.eval_at_one()
    if not den1:
        raise ZeroDivisionError("denominator vanishes at z = 1")
    return num1 / den1
