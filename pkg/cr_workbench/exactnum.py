"""
Exact Gaussian-rational scalars and dense linear algebra over Q(i).

Scalars are sympy's ``QQ_I`` elements (``GaussianRational``) whose real and imaginary
parts are arbitrary precision rationals, always kept in lowest terms with a positive
denominator. Vectors are tuples of scalars; matrices are ``DomainMatrix`` instances
over ``QQ_I``. Row reduction is delegated to ``DomainMatrix.rref``; kernels, subspace
sums, intersections and quotients are built on top of it.

Nothing in here uses floating point.
"""
import random
import re

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix

from cr_workbench.exceptions import DimensionMismatch, ExactArithmeticError, PreconditionError

GaussianRational = type(QQ_I.one)

ZERO = QQ_I.zero
ONE = QQ_I.one
I = QQ_I.imag_unit
HALF = QQ_I(QQ(1, 2), QQ(0))

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


# -- scalars -----------------------------------------------------------------------------


def gq(re_part=0, im_part=0):
    """
    Build a Gaussian rational.

    Each part may be an int, a sympy/gmpy rational, a ``fractions.Fraction`` or a "p/q" string.
    """
    return QQ_I(_to_qq(re_part), _to_qq(im_part))


def _to_qq(value):
    if isinstance(value, str):
        return parse_rational(value)
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        return QQ(int(value.numerator), int(value.denominator))
    return QQ.convert(value)


def scalar(value):
    """Coerce ints, rationals and Gaussian rationals into QQ_I."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, str):
        return QQ_I(parse_rational(value), QQ(0))
    return QQ_I(_to_qq(value), QQ(0))


def add(a, b):
    return a + b


def multiply(a, b):
    return a * b


def negate(a):
    return -a


def conjugate(a):
    return QQ_I(a.x, -a.y)


def invert(a):
    if not a:
        raise ExactArithmeticError("Cannot invert zero")
    return ONE / a


def divide(a, b):
    return a * invert(b)


def is_real(a):
    return a.y == 0


def real_part(a):
    return a.x


def imag_part(a):
    return a.y


# -- serialization -----------------------------------------------------------------------


def parse_rational(text):
    """Parse "p/q" (or "p") into a canonical rational."""
    match = _RATIONAL_RE.match(text)
    if not match:
        raise ValueError(f"Not a rational number: '{text}'")
    num = int(match.group(1))
    den = int(match.group(2) or 1)
    if den == 0:
        raise ExactArithmeticError(f"Zero denominator in '{text}'")
    return QQ(num, den)


def format_rational(q):
    """Canonical "p/q" string, q > 0 and gcd(|p|, q) = 1."""
    return f"{int(q.numerator)}/{int(q.denominator)}"


def scalar_to_json(a):
    return {"re": format_rational(a.x), "im": format_rational(a.y)}


def scalar_from_json(obj):
    return QQ_I(parse_rational(obj["re"]), parse_rational(obj["im"]))


def _short_rational(q):
    if q.denominator == 1:
        return str(int(q.numerator))
    return f"{int(q.numerator)}/{int(q.denominator)}"


def format_scalar(a):
    """Human readable form: "3/2", "-i", "1/2 + 1/4i"."""
    re_part, im_part = a.x, a.y
    if im_part == 0:
        return _short_rational(re_part)
    if im_part == 1:
        im_text = "i"
    elif im_part == -1:
        im_text = "-i"
    else:
        im_text = _short_rational(im_part) + "i"
    if re_part == 0:
        return im_text
    if im_text.startswith("-"):
        return f"{_short_rational(re_part)} - {im_text[1:]}"
    return f"{_short_rational(re_part)} + {im_text}"


# -- vectors ---------------------------------------------------------------------------


def vector(entries):
    return tuple(scalar(e) for e in entries)


def zero_vector(n):
    return (ZERO,) * n


def unit_vector(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


def _check_same_length(u, v, what):
    if len(u) != len(v):
        raise DimensionMismatch(what, len(u), len(v))


def vadd(u, v):
    _check_same_length(u, v, "vector addition")
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    _check_same_length(u, v, "vector subtraction")
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    c = scalar(c)
    return tuple(c * a for a in v)


def vneg(v):
    return tuple(-a for a in v)


def vconj(v):
    return tuple(conjugate(a) for a in v)


def is_zero_vector(v):
    return not any(v)


def linear_combination(coeffs, vectors, n):
    out = zero_vector(n)
    for c, v in zip(coeffs, vectors):
        if c:
            out = vadd(out, vscale(c, v))
    return out


def realify(v):
    """(Re v, Im v) as a real vector of twice the length, entries in QQ_I with zero im."""
    return tuple(QQ_I(a.x, QQ(0)) for a in v) + tuple(QQ_I(a.y, QQ(0)) for a in v)


def complexify(r):
    """Inverse of ``realify``."""
    n = len(r) // 2
    return tuple(QQ_I(r[j].x, r[n + j].x) for j in range(n))


def random_scalar(rng, bound=5, real=False):
    """A random Gaussian rational with numerators and denominators bounded by ``bound``."""

    def part():
        return QQ(rng.randint(-bound, bound), rng.randint(1, bound))

    return QQ_I(part(), QQ(0) if real else part())


def random_vector(rng, n, bound=5):
    return tuple(random_scalar(rng, bound) for _ in range(n))


def seeded_rng(seed):
    return random.Random(seed)


# -- matrices --------------------------------------------------------------------------


def matrix(rows, ncols=None):
    """DomainMatrix over QQ_I from a list of rows; ``ncols`` is needed for zero rows."""
    rows = [[scalar(e) for e in row] for row in rows]
    if ncols is None:
        if not rows:
            raise DimensionMismatch("matrix construction", "at least one row or ncols", 0)
        ncols = len(rows[0])
    for row in rows:
        if len(row) != ncols:
            raise DimensionMismatch("matrix row", ncols, len(row))
    return DomainMatrix(rows, (len(rows), ncols), QQ_I)


def identity(n):
    return DomainMatrix.eye(n, QQ_I).to_dense()


def zero_matrix(m, n):
    return matrix([[ZERO] * n for _ in range(m)], n)


def rows_of(m):
    return [tuple(row) for row in m.to_dense().to_list()]


def columns_of(m):
    return rows_of(m.transpose())


def mat_vec(m, v):
    rows, cols = m.shape
    if cols != len(v):
        raise DimensionMismatch("matrix-vector product", cols, len(v))
    return tuple(sum((a * b for a, b in zip(row, v)), ZERO) for row in rows_of(m))


def mat_mul(a, b):
    if a.shape[1] != b.shape[0]:
        raise DimensionMismatch("matrix product", a.shape[1], b.shape[0])
    return a.matmul(b)


def mat_conj(m):
    return matrix([[conjugate(e) for e in row] for row in rows_of(m)], m.shape[1])


def rref(m):
    """
    Reduced row-echelon form.

    :param m: (DomainMatrix) matrix over QQ_I

    :return: (reduced DomainMatrix, list of pivot columns, rank)
    """
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return m, [], 0
    reduced, pivots = m.to_dense().rref(method="GJ")
    return reduced, list(pivots), len(pivots)


def rank(m):
    return rref(m)[2]


def kernel(m):
    """The subspace {v : m v = 0}."""
    nrows, ncols = m.shape
    if nrows == 0:
        return Subspace.full(ncols)
    reduced, pivots, r = rref(m)
    rows = rows_of(reduced)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(tuple(v))
    return Subspace.span(basis, ncols)


def solve(columns, rhs):
    """
    A particular solution x of sum_j x_j columns[j] = rhs, or None if there is none.

    Free variables are set to zero, so the solution is deterministic.
    """
    n = len(rhs)
    if not columns:
        return [] if is_zero_vector(rhs) else None
    ncols = len(columns)
    aug = [[columns[j][i] for j in range(ncols)] + [rhs[i]] for i in range(n)]
    reduced, pivots, _ = rref(matrix(aug, ncols + 1))
    if ncols in pivots:
        return None
    rows = rows_of(reduced)
    x = [ZERO] * ncols
    for i, p in enumerate(pivots):
        x[p] = rows[i][ncols]
    return x


# -- subspaces -------------------------------------------------------------------------


class Subspace(object):
    """
    A subspace of QQ_I^n kept in canonical form: the nonzero rows of the RREF of any
    spanning set. Two subspaces are equal iff their canonical bases are identical.
    """

    __slots__ = ("ambient_dim", "basis", "pivot_columns")

    def __init__(self, ambient_dim, basis, pivot_columns):
        self.ambient_dim = ambient_dim
        self.basis = tuple(basis)
        self.pivot_columns = tuple(pivot_columns)

    @classmethod
    def span(cls, vectors, ambient_dim):
        vectors = [tuple(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch("subspace span", ambient_dim, len(v))
        if not vectors:
            return cls(ambient_dim, [], [])
        reduced, pivots, r = rref(matrix(vectors, ambient_dim))
        return cls(ambient_dim, rows_of(reduced)[:r], pivots)

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, [], [])

    @classmethod
    def full(cls, ambient_dim):
        return cls(
            ambient_dim,
            [unit_vector(ambient_dim, i) for i in range(ambient_dim)],
            range(ambient_dim),
        )

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, pivots={list(self.pivot_columns)})"

    def _check_ambient(self, other, what):
        other_dim = other.ambient_dim if isinstance(other, Subspace) else len(other)
        if other_dim != self.ambient_dim:
            raise DimensionMismatch(what, self.ambient_dim, other_dim)

    def reduce(self, v):
        """Eliminate the pivot coordinates of v; the result is the canonical representative of v mod self."""
        self._check_ambient(v, "subspace reduction")
        v = list(v)
        for row, p in zip(self.basis, self.pivot_columns):
            c = v[p]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return tuple(v)

    def contains(self, v):
        return is_zero_vector(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v):
        """Coordinates of v in the canonical basis; None when v is not in the subspace."""
        if not self.contains(v):
            return None
        return [v[p] for p in self.pivot_columns]

    def quotient_coords(self, v):
        """Coordinates of the class of v in the complement spanned by the non-pivot coordinates."""
        reduced = self.reduce(v)
        return tuple(reduced[c] for c in self.free_columns)

    @property
    def free_columns(self):
        return [c for c in range(self.ambient_dim) if c not in self.pivot_columns]

    def is_subspace_of(self, other):
        self._check_ambient(other, "subspace containment")
        return all(other.contains(b) for b in self.basis)

    def __le__(self, other):
        return self.is_subspace_of(other)

    def sum(self, other):
        self._check_ambient(other, "subspace sum")
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    __add__ = sum

    def annihilator(self):
        """Row vectors a with a . v = 0 for all v in self (bilinear, no conjugation)."""
        if not self.basis:
            return Subspace.full(self.ambient_dim)
        return kernel(matrix(self.basis, self.ambient_dim))

    def intersection(self, other):
        self._check_ambient(other, "subspace intersection")
        constraints = self.annihilator().basis + other.annihilator().basis
        if not constraints:
            return Subspace.full(self.ambient_dim)
        return kernel(matrix(constraints, self.ambient_dim))

    __and__ = intersection

    def complement_in(self, sub):
        """
        Vectors of this subspace's canonical basis spanning a complement of ``sub``
        (which must be contained in self), chosen greedily in basis order.
        """
        self._check_ambient(sub, "subspace complement")
        chosen = []
        current = sub
        for b in self.basis:
            if not current.contains(b):
                chosen.append(b)
                current = Subspace.span(current.basis + (b,), self.ambient_dim)
        return chosen

    def quotient_basis(self, sub):
        """
        Canonical basis of self / sub: the reductions of self's basis modulo ``sub``,
        brought to RREF. Each vector is supported on the non-pivot coordinates of ``sub``.
        """
        reduced = [sub.reduce(b) for b in self.basis]
        return Subspace.span(reduced, self.ambient_dim)

    def image(self, fn):
        return Subspace.span([fn(b) for b in self.basis], self.ambient_dim)


def quotient_class_coordinates(v, quotient, sub):
    """
    Coordinates of the class of v in ``quotient`` (a ``quotient_basis`` of some space over ``sub``).
    v must lie in sub + span(quotient).
    """
    reduced = sub.reduce(v)
    coords = quotient.coordinates(reduced)
    if coords is None:
        raise PreconditionError("quotient coordinates: the vector lies outside sub + span(quotient)")
    return coords
