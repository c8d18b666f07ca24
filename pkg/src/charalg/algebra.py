"""Finite-dimensional commutative unital algebras given by structure constants.

An AlgebraSpec is a basis e_0..e_{d-1}, a d x d table of coefficient vectors
(mul[i][j] is the vector of e_i * e_j), and the coordinate vector of the unit.
Elements are exact rational coordinate vectors over a spec.  On top of that
the module builds tensor powers, symmetric powers (as invariant subalgebras of
the tensor power, with the orbit-sum integral basis), and the generalized
p|q symmetric powers cut out inside S^pA (x) S^qA by the condition that
multiplying the last tensor slot of each factor lands in a scalar multiple of
the unit.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, permutations, product
from math import factorial

from .linalg import ZERO, ONE, nullspace, rref, solve


class SingularElement(Exception):
    """Raised when inverting an element whose multiplication matrix is singular."""


class NotClosed(Exception):
    """A computed subspace failed the subalgebra check (or misses the unit)."""


class SizeBoundExceeded(Exception):
    """A construction would exceed the configured ambient dimension bound."""


DEFAULT_SIZE_BOUND = 4096


def _check_bound(dim, size_bound):
    bound = DEFAULT_SIZE_BOUND if size_bound is None else size_bound
    if dim > bound:
        raise SizeBoundExceeded("ambient dimension %d exceeds bound %d"
                                % (dim, bound))


def _coerce(value):
    return value if isinstance(value, Fraction) else Fraction(value)


class AlgebraSpec:
    """Commutative unital algebra over Q presented by structure constants."""

    __slots__ = ("dim", "mul", "unit", "labels")

    def __init__(self, mul_table, unit, labels=None):
        self.mul = tuple(tuple(tuple(_coerce(c) for c in vec) for vec in row)
                         for row in mul_table)
        self.dim = len(self.mul)
        self.unit = tuple(_coerce(c) for c in unit)
        if labels is None:
            labels = tuple("e%d" % i for i in range(self.dim))
        self.labels = tuple(labels)
        if len(self.unit) != self.dim or len(self.labels) != self.dim:
            raise ValueError("unit/labels length does not match dimension")
        for row in self.mul:
            if len(row) != self.dim or any(len(v) != self.dim for v in row):
                raise ValueError("multiplication table is not dim x dim x dim")

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, AlgebraSpec) and self.dim == other.dim
                and self.unit == other.unit and self.mul == other.mul)

    def __ne__(self, other):
        return not self.__eq__(other)

    def zero(self):
        return Element(self, (ZERO,) * self.dim)

    def one(self):
        return Element(self, self.unit)

    def basis_element(self, i):
        return Element(self, tuple(ONE if j == i else ZERO
                                   for j in range(self.dim)))

    def basis(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def element(self, coords):
        coords = tuple(_coerce(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError("expected %d coordinates, got %d"
                             % (self.dim, len(coords)))
        return Element(self, coords)

    def mul_vec(self, u, v):
        """Bilinear extension of the table to coordinate vectors."""
        acc = [ZERO] * self.dim
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = self.mul[i]
            for j, vj in enumerate(v):
                if not vj:
                    continue
                w = ui * vj
                for k, c in enumerate(row[j]):
                    if c:
                        acc[k] += w * c
        return tuple(acc)

    def __repr__(self):
        return "AlgebraSpec(dim=%d, labels=%s)" % (self.dim, list(self.labels))


class Element:
    """A coordinate vector over a fixed AlgebraSpec."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _check(self, other):
        if self.algebra != other.algebra:
            raise ValueError("elements live in different algebras")

    def __add__(self, other):
        self._check(other)
        return Element(self.algebra,
                       (a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return Element(self.algebra,
                       (a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Element(self.algebra, (-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            return Element(self.algebra,
                           self.algebra.mul_vec(self.coords, other.coords))
        return Element(self.algebra, (a * other for a in self.coords))

    def __rmul__(self, scalar):
        return Element(self.algebra, (a * scalar for a in self.coords))

    def __truediv__(self, scalar):
        return Element(self.algebra, (a / scalar for a in self.coords))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("powers must be integers >= 0")
        acc = self.algebra.one()
        for _ in range(k):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return (isinstance(other, Element) and self.algebra == other.algebra
                and self.coords == other.coords)

    def __bool__(self):
        return any(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def invert(self):
        return invert(self)

    def __repr__(self):
        terms = ["%s*%s" % (c, l)
                 for c, l in zip(self.coords, self.algebra.labels) if c]
        return "<%s>" % (" + ".join(terms) if terms else "0")


def mul(u, v):
    return u * v


def power(u, k):
    return u ** k


def validate_algebra(spec):
    """Exact commutativity, associativity and unit checks.

    Returns a list of human-readable violations; empty means the table really
    is a commutative unital associative algebra.
    """
    out = []
    d = spec.dim
    for i in range(d):
        for j in range(i + 1, d):
            if spec.mul[i][j] != spec.mul[j][i]:
                out.append("commutativity: e%d*e%d != e%d*e%d" % (i, j, j, i))
    for i in range(d):
        ei = tuple(ONE if k == i else ZERO for k in range(d))
        if spec.mul_vec(spec.unit, ei) != ei:
            out.append("unit law fails on e%d" % i)
    for i in range(d):
        ei = tuple(ONE if k == i else ZERO for k in range(d))
        for j in range(d):
            ej = tuple(ONE if k == j else ZERO for k in range(d))
            left = spec.mul[i][j]
            for k in range(d):
                ek = tuple(ONE if t == k else ZERO for t in range(d))
                if spec.mul_vec(left, ek) != spec.mul_vec(ei, spec.mul[j][k]):
                    out.append("associativity: (e%d e%d) e%d != e%d (e%d e%d)"
                               % (i, j, k, i, j, k))
    return out


def invert(u):
    """Solve u * v = 1 exactly; SingularElement if no inverse exists."""
    spec = u.algebra
    d = spec.dim
    cols = []
    for j in range(d):
        ej = tuple(ONE if k == j else ZERO for k in range(d))
        cols.append(spec.mul_vec(u.coords, ej))
    rows = [tuple(cols[j][k] for j in range(d)) for k in range(d)]
    x = solve(rows, spec.unit)
    if x is None:
        raise SingularElement("element has no inverse: %r" % (u,))
    v = Element(spec, x)
    if (u * v).coords != spec.unit:       # non-square-rank safety net
        raise SingularElement("element has no inverse: %r" % (u,))
    return v


@lru_cache(maxsize=None)
def _function_algebra_cached(labels):
    d = len(labels)
    table = tuple(tuple(tuple(ONE if i == j and k == i else ZERO
                              for k in range(d))
                        for j in range(d))
                  for i in range(d))
    return AlgebraSpec(table, (ONE,) * d, labels)


def function_algebra(labels):
    """C(X) for a finite point set: delta basis, pointwise product."""
    labels = tuple(labels)
    if not labels:
        raise ValueError("need at least one point")
    if len(set(labels)) != len(labels):
        raise ValueError("duplicate point labels")
    return _function_algebra_cached(labels)


def scalar_algebra():
    """The ground field as a 1-dimensional algebra."""
    return _function_algebra_cached(("1",))


def as_rational(u):
    """Coordinate of an element of the 1-dimensional scalar algebra."""
    if u.algebra.dim != 1:
        raise ValueError("not a scalar-algebra element")
    return u.coords[0]


def truncated_poly_algebra(order, var="x"):
    """Q[x]/(x^order) with basis 1, x, ..., x^(order-1)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    d = order
    table = tuple(tuple(tuple(ONE if i + j == k else ZERO for k in range(d))
                        for j in range(d))
                  for i in range(d))
    unit = tuple(ONE if k == 0 else ZERO for k in range(d))
    labels = ["1"] + [var if p == 1 else "%s^%d" % (var, p)
                      for p in range(1, d)]
    return AlgebraSpec(table, unit, labels)


def _tensor_entry(spec_list, I, J):
    """Nonzero coordinates of (e_I)(e_J) in a tensor product, as a dict."""
    partial = {(): ONE}
    for spec, i, j in zip(spec_list, I, J):
        vec = spec.mul[i][j]
        nxt = {}
        for idx, c in partial.items():
            for k, ck in enumerate(vec):
                if ck:
                    nxt[idx + (k,)] = c * ck
        partial = nxt
    return partial


def _tensor_build(spec_list, size_bound):
    dims = [s.dim for s in spec_list]
    total = 1
    for d in dims:
        total *= d
    _check_bound(total, size_bound)
    index_tuples = list(product(*[range(d) for d in dims]))
    index_of = {t: n for n, t in enumerate(index_tuples)}
    table = []
    for I in index_tuples:
        row = []
        for J in index_tuples:
            entry = _tensor_entry(spec_list, I, J)
            vec = [ZERO] * total
            for idx, c in entry.items():
                vec[index_of[idx]] = c
            row.append(tuple(vec))
        table.append(tuple(row))
    unit = [ZERO] * total
    for idx in product(*[[(k, c) for k, c in enumerate(s.unit) if c]
                         for s in spec_list]):
        t = tuple(k for k, _ in idx)
        c = ONE
        for _, ck in idx:
            c *= ck
        unit[index_of[t]] = c
    labels = ["(x)".join(spec_list[p].labels[i] for p, i in enumerate(I))
              for I in index_tuples]
    return AlgebraSpec(table, unit, labels), index_tuples, index_of


def tensor_product(a, b, size_bound=None):
    """A (x) B with the componentwise product; basis ordered (i, j) lex."""
    spec, _, _ = _tensor_build([a, b], size_bound)
    return spec


def tensor_power(spec, n, size_bound=None):
    """A^(x)n with basis indexed by n-tuples in lexicographic order."""
    if n < 0:
        raise ValueError("tensor power needs n >= 0")
    built, _, _ = _tensor_build([spec] * n, size_bound)
    return built


class SubalgebraSpec:
    """A subalgebra of an ambient AlgebraSpec, with its induced table.

    basis_vectors are ambient coordinate vectors; `induced` carries the
    structure constants in the sub-basis.  `express` writes an ambient vector
    in the sub-basis or raises ValueError when it is outside the span.
    """

    def __init__(self, ambient, basis_vectors, induced):
        self.ambient = ambient
        self.basis_vectors = tuple(tuple(v) for v in basis_vectors)
        self.induced = induced
        self._solver = None

    @property
    def dim(self):
        return len(self.basis_vectors)

    def _build_solver(self):
        # RREF of [B | I] where columns of B are the basis vectors; then for
        # any v, T v reads off coordinates at the pivot rows and must vanish
        # on the zero rows for v to lie in the span.
        amb = self.ambient.dim
        m = self.dim
        aug = []
        for r in range(amb):
            row = [self.basis_vectors[c][r] for c in range(m)]
            row += [ONE if c == r else ZERO for c in range(amb)]
            aug.append(tuple(row))
        red, pivots = rref(aug)
        if len([p for p in pivots if p < m]) != m:
            raise ValueError("subalgebra basis vectors are dependent")
        self._solver = (red, pivots, m)

    def express(self, vector):
        """Coordinates of an ambient vector in the sub-basis (exact)."""
        if self._solver is None:
            self._build_solver()
        red, pivots, m = self._solver
        amb = self.ambient.dim
        coords = [ZERO] * m
        for r, p in enumerate(pivots):
            y = sum((red[r][m + j] * vector[j] for j in range(amb)
                     if vector[j]), ZERO)
            if p < m:
                coords[p] = y
            elif y:
                raise ValueError("vector is not in the subalgebra span")
        for r in range(len(pivots), amb):
            y = sum((red[r][m + j] * vector[j] for j in range(amb)
                     if vector[j]), ZERO)
            if y:
                raise ValueError("vector is not in the subalgebra span")
        return tuple(coords)

    def embed(self, sub_element):
        """Ambient coordinate vector of an element given in the sub-basis."""
        amb = self.ambient.dim
        out = [ZERO] * amb
        for c, vec in zip(sub_element.coords, self.basis_vectors):
            if c:
                for k, v in enumerate(vec):
                    if v:
                        out[k] += c * v
        return tuple(out)

    def element_from_ambient(self, vector):
        return Element(self.induced, self.express(vector))


def _induced_table(ambient, basis_vectors, sub, labels):
    """Structure constants of a subspace closed under the ambient product."""
    m = len(basis_vectors)
    table = []
    for i in range(m):
        row = []
        for j in range(m):
            prod_vec = ambient.mul_vec(basis_vectors[i], basis_vectors[j])
            try:
                row.append(sub.express(prod_vec))
            except ValueError:
                raise NotClosed("product of sub-basis %d,%d leaves the span"
                                % (i, j))
        table.append(tuple(row))
    try:
        unit = sub.express(ambient.unit)
    except ValueError:
        raise NotClosed("ambient unit is not in the subspace")
    return AlgebraSpec(table, unit, labels)


class SymmetricPower(SubalgebraSpec):
    """S^nA inside A^(x)n, on the orbit-sum basis (one per multiset)."""

    def __init__(self, base, n, ambient, basis_vectors, induced, multisets):
        super().__init__(ambient, basis_vectors, induced)
        self.base = base
        self.n = n
        self.multisets = tuple(multisets)

    def orbit_size(self, m_index):
        return _orbit_size(self.multisets[m_index])


def _orbit_size(multiset):
    size = factorial(len(multiset))
    for c in Counter(multiset).values():
        size //= factorial(c)
    return size


def _multiset_label(spec, multiset):
    return "[%s]" % ",".join(spec.labels[i] for i in multiset)


def symmetric_power(spec, n, size_bound=None):
    """The invariant subalgebra of A^(x)n spanned by orbit sums.

    The basis vector for a multiset M sums the distinct permutations of M
    (no 1/n! averaging, so structure constants stay integral whenever the
    base algebra's are).
    """
    if n < 0:
        raise ValueError("symmetric power needs n >= 0")
    ambient, index_tuples, index_of = _tensor_build([spec] * n, size_bound)
    multisets = list(combinations_with_replacement(range(spec.dim), n))
    basis_vectors = []
    for M in multisets:
        vec = [ZERO] * ambient.dim
        for perm in set(permutations(M)):
            vec[index_of[perm]] = ONE
        basis_vectors.append(tuple(vec))
    # Products of orbit sums are again invariant, so their coordinates in the
    # orbit basis can be read off at the sorted representative positions.
    m = len(multisets)
    rep_index = [index_of[M] for M in multisets]
    table = []
    for i in range(m):
        row = []
        for j in range(m):
            prod_vec = ambient.mul_vec(basis_vectors[i], basis_vectors[j])
            row.append(tuple(prod_vec[r] for r in rep_index))
        table.append(tuple(row))
    # 1^(x)n is itself invariant, so its orbit coordinates read off the same way
    unit = tuple(ambient.unit[r] for r in rep_index)
    labels = [_multiset_label(spec, M) for M in multisets]
    induced = AlgebraSpec(table, unit, labels)
    return SymmetricPower(spec, n, ambient, basis_vectors, induced, multisets)


class MuMap:
    """Matrix of the map S^pA (x) S^qA -> S^(p-1)A (x) S^(q-1)A (x) A that
    multiplies the last tensor slot of the first factor with the last slot of
    the second factor and stores the product in the final position.

    Domain basis: pairs (M, M') of multisets, index M_idx * m_q + M'_idx.
    Codomain basis: triples (N, N', k), index (N_idx * m_q1 + N'_idx) * d + k.
    """

    def __init__(self, base, p, q, sym_p, sym_q, sym_p1, sym_q1, matrix):
        self.base = base
        self.p = p
        self.q = q
        self.sym_p = sym_p
        self.sym_q = sym_q
        self.sym_p1 = sym_p1
        self.sym_q1 = sym_q1
        self.matrix = matrix


def mu_map(spec, p, q, size_bound=None):
    if p < 1 or q < 1:
        raise ValueError("mu_map needs p, q >= 1")
    d = spec.dim
    sym_p = symmetric_power(spec, p, size_bound)
    sym_q = symmetric_power(spec, q, size_bound)
    sym_p1 = symmetric_power(spec, p - 1, size_bound)
    sym_q1 = symmetric_power(spec, q - 1, size_bound)
    m_p, m_q = len(sym_p.multisets), len(sym_q.multisets)
    m_p1, m_q1 = len(sym_p1.multisets), len(sym_q1.multisets)
    row_of = {}
    for a, N in enumerate(sym_p1.multisets):
        for b, N2 in enumerate(sym_q1.multisets):
            for k in range(d):
                row_of[(N, N2, k)] = (a * m_q1 + b) * d + k
    matrix = [[ZERO] * (m_p * m_q) for _ in range(m_p1 * m_q1 * d)]
    for mi, M in enumerate(sym_p.multisets):
        for mj, M2 in enumerate(sym_q.multisets):
            col = mi * m_q + mj
            acc = {}
            for I in set(permutations(M)):
                for J in set(permutations(M2)):
                    vec = spec.mul[I[-1]][J[-1]]
                    key_head = (I[:-1], J[:-1])
                    for k, c in enumerate(vec):
                        if c:
                            key = key_head + (k,)
                            acc[key] = acc.get(key, ZERO) + c
            # collect: the image is S_{p-1} x S_{q-1} invariant, so reading
            # the sorted representatives recovers the orbit coordinates
            for (N, N2, k), c in acc.items():
                if tuple(sorted(N)) == N and tuple(sorted(N2)) == N2 and c:
                    matrix[row_of[(N, N2, k)]][col] = c
    matrix = tuple(tuple(r) for r in matrix)
    return MuMap(spec, p, q, sym_p, sym_q, sym_p1, sym_q1, matrix)


class SuperPower(SubalgebraSpec):
    """S^{p|q}A: the mu-preimage subalgebra inside S^pA (x) S^qA."""

    def __init__(self, base, p, q, ambient, basis_vectors, induced):
        super().__init__(ambient, basis_vectors, induced)
        self.base = base
        self.p = p
        self.q = q


def super_power(spec, p, q, size_bound=None):
    """Generalized symmetric power S^{p|q}A.

    For p, q >= 1 this is the subspace of S^pA (x) S^qA whose image under the
    last-slot multiplication map lies in S^(p-1)A (x) S^(q-1)A (x) Q*1, taken
    with its induced structure constants; NotClosed is raised if the computed
    subspace fails the subalgebra check.  S^{p|0}A = S^pA and S^{0|q}A = S^qA
    by convention.
    """
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("super power needs p, q >= 0 with p + q >= 1")
    if q == 0:
        return symmetric_power(spec, p, size_bound)
    if p == 0:
        return symmetric_power(spec, q, size_bound)
    mu = mu_map(spec, p, q, size_bound)
    d = spec.dim
    m_p1 = len(mu.sym_p1.multisets)
    m_q1 = len(mu.sym_q1.multisets)
    ncols = len(mu.sym_p.multisets) * len(mu.sym_q.multisets)
    unit = spec.unit
    # last tensor slot must be proportional to the unit: u_l v_k - u_k v_l = 0
    constraints = []
    for block in range(m_p1 * m_q1):
        rows = [mu.matrix[block * d + k] for k in range(d)]
        for k in range(d):
            for l in range(k + 1, d):
                row = tuple(unit[l] * rows[k][c] - unit[k] * rows[l][c]
                            for c in range(ncols))
                if any(row):
                    constraints.append(row)
    basis_vectors = nullspace(constraints, ncols)
    ambient = tensor_product(mu.sym_p.induced, mu.sym_q.induced, size_bound)
    labels = ["s%d" % i for i in range(len(basis_vectors))]
    sub = SubalgebraSpec(ambient, basis_vectors, None)
    induced = _induced_table(ambient, basis_vectors, sub, labels)
    return SuperPower(spec, p, q, ambient, basis_vectors, induced)
