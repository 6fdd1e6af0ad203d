"""
CR algebras (g, tau, f): CR dimensions, the Freeman sequence and nondegeneracy verdict,
weak nondegeneracy, Levi forms of every order and the partial complex structure at the
base point.

Throughout, t = f ∩ tau(f) is the complexified isotropy algebra.
"""
import functools

from cr_workbench import exactnum as en
from cr_workbench import liecore
from cr_workbench.exceptions import (
    NonStabilization,
    PartialComplexStructureError,
    PreconditionError,
)
from cr_workbench.utils.config import get_config

NONDEGENERATE = "NondegenerateOfOrder"
HOLOMORPHICALLY_DEGENERATE = "HolomorphicallyDegenerate"
TOTALLY_COMPLEX = "TotallyComplex"


class CRAlgebra(object):
    """
    :param g:   (LieAlgebra)     the complex Lie algebra
    :param tau: (AntilinearMap)  antilinear involutive automorphism, real form g^tau
    :param f:   (Subspace)       complex subalgebra of g

    :raises InvalidStructure: if tau fails check_involution or f is not a subalgebra
    """

    def __init__(self, g, tau, f):
        self.g = g
        self.tau = tau
        self.f = f
        liecore.require(liecore.check_involution(g, tau))
        liecore.require(liecore.check_subalgebra(g, f))

    @functools.cached_property
    def tau_f(self):
        return self.tau.image(self.f)

    @functools.cached_property
    def isotropy(self):
        """t = f ∩ tau(f)."""
        return self.f.intersection(self.tau_f)

    @functools.cached_property
    def f_plus_tau_f(self):
        return self.f.sum(self.tau_f)

    def label(self, v):
        return self.g.describe(v)


def cr_dimensions(a):
    """
    :return: (crdim, crcodim) with crdim = dim f - dim(f ∩ tau f) and
             crcodim = dim g - dim(f + tau f), all complex dimensions
    """
    crdim = a.f.dim - a.isotropy.dim
    crcodim = a.g.dim - a.f_plus_tau_f.dim
    return crdim, crcodim


def freeman_step(a, s):
    """
    {Z in s : [Z, W] in s + tau(f) for every W in tau(f)}

    Computed as the kernel of Z -> (class of [Z, W_j] mod s + tau f)_j over the canonical
    basis of s.
    """
    if not s.is_subspace_of(a.f) or not a.isotropy.is_subspace_of(s):
        raise PreconditionError("freeman_step needs f ∩ tau(f) ⊆ s ⊆ f")
    target = s.sum(a.tau_f)
    generators = a.tau_f.basis
    columns = []
    for z in s.basis:
        column = []
        for w in generators:
            column.extend(target.quotient_coords(a.g.bracket(z, w)))
        columns.append(column)
    if not columns or not columns[0]:
        return s
    nrows = len(columns[0])
    system = en.matrix([[columns[c][r] for c in range(len(columns))] for r in range(nrows)], len(columns))
    solutions = en.kernel(system)
    return en.Subspace.span(
        [en.linear_combination(c, s.basis, a.g.dim) for c in solutions.basis], a.g.dim
    )


class Verdict(object):
    def __init__(self, kind, order=None):
        self.kind = kind
        self.order = order

    def __eq__(self, other):
        return isinstance(other, Verdict) and (self.kind, self.order) == (other.kind, other.order)

    def __hash__(self):
        return hash((self.kind, self.order))

    def __str__(self):
        if self.kind == NONDEGENERATE:
            return f"{self.kind}({self.order})"
        return self.kind

    __repr__ = __str__


class FreemanSequence(object):
    """
    steps[0] = f, steps[h+1] = freeman_step(steps[h]); the last two steps are equal.
    stabilization_index is the first h with steps[h] = steps[h+1].
    """

    def __init__(self, steps, verdict, stabilization_index):
        self.steps = steps
        self.verdict = verdict
        self.stabilization_index = stabilization_index

    @property
    def dims(self):
        return [s.dim for s in self.steps]

    @property
    def stable(self):
        return self.steps[-1]


def freeman_sequence(a, max_steps=None):
    """
    Iterate freeman_step until two consecutive steps agree.

    :param max_steps: (int) cap on the number of steps; defaults to CRWB_MAX_STEPS

    :raises NonStabilization: if the cap is reached first
    """
    if max_steps is None:
        max_steps = get_config()["max_steps"]
    if max_steps < 1:
        raise PreconditionError("max_steps must be at least 1")
    steps = [a.f]
    while True:
        if len(steps) > max_steps:
            raise NonStabilization(max_steps, [s.dim for s in steps])
        steps.append(freeman_step(a, steps[-1]))
        if steps[-1] == steps[-2]:
            break
    index = len(steps) - 2
    _, crcodim = cr_dimensions(a)
    if crcodim == 0:
        verdict = Verdict(TOTALLY_COMPLEX)
    elif steps[-1] == a.isotropy:
        verdict = Verdict(NONDEGENERATE, index)
    else:
        verdict = Verdict(HOLOMORPHICALLY_DEGENERATE)
    return FreemanSequence(steps, verdict, index)


def weak_nondegeneracy(a, sequence=None):
    """f' = f + tau(stable Freeman term); weakly nondegenerate iff f' = f."""
    if sequence is None:
        sequence = freeman_sequence(a)
    f_prime = a.f.sum(a.tau.image(sequence.stable))
    return f_prime == a.f


class LeviMatrix(object):
    """
    Levi form of order h+1 on f^h/t x tau(f)/t with values in
    (f^(h-1) + tau f) / (f^h + tau f), or g / (f + tau f) for order 1.

    entries[t][i][j] is the t-th target coordinate of [rows[i], cols[j]].
    """

    def __init__(self, a, order, rows, cols, target, source, sub):
        self.a = a
        self.order = order
        self.rows = rows
        self.cols = cols
        self.target = target  # Subspace: quotient basis over sub
        self.source = source  # f^h
        self.sub = sub  # f^h + tau f
        self.entries = [
            [[en.ZERO] * len(cols) for _ in rows] for _ in range(target.dim)
        ]
        for i, z in enumerate(rows):
            for j, w in enumerate(cols):
                for t, c in enumerate(self.pairing(z, w)):
                    self.entries[t][i][j] = c

    def pairing(self, z, w):
        """Target coordinates of the class of [z, w]."""
        return en.quotient_class_coordinates(self.a.g.bracket(z, w), self.target, self.sub)

    @property
    def row_basis(self):
        return [self.a.label(z) for z in self.rows]

    @property
    def col_basis(self):
        return [f"tau({self.a.label(self.a.tau.apply(w))})" for w in self.cols]

    @property
    def target_basis(self):
        return [self.a.label(v) for v in self.target.basis]

    def flattened(self):
        """Row i -> all target/column entries; rows x (targets * cols)."""
        return [
            [self.entries[t][i][j] for t in range(self.target.dim) for j in range(len(self.cols))]
            for i in range(len(self.rows))
        ]

    def rank(self):
        flat = self.flattened()
        if not flat or not flat[0]:
            return 0
        return en.rank(en.matrix(flat))

    def support(self):
        """1-based (row, col) positions holding a nonzero entry in some target component."""
        return sorted(
            {
                (i + 1, j + 1)
                for t in range(self.target.dim)
                for i in range(len(self.rows))
                for j in range(len(self.cols))
                if self.entries[t][i][j]
            }
        )

    def left_kernel(self):
        """{Z in span(rows) : every pairing vanishes} + t."""
        n = self.a.g.dim
        flat = self.flattened()
        if not self.rows:
            return self.a.isotropy
        if not flat[0]:
            combos = [en.unit_vector(len(self.rows), i) for i in range(len(self.rows))]
        else:
            transposed = [[flat[i][c] for i in range(len(self.rows))] for c in range(len(flat[0]))]
            combos = en.kernel(en.matrix(transposed, len(self.rows))).basis
        vectors = [en.linear_combination(c, self.rows, n) for c in combos]
        return en.Subspace.span(vectors + list(self.a.isotropy.basis), n)


def levi_matrix(a, order, sequence=None):
    """
    :param order: (int) 1 <= order <= stabilization index + 1

    :raises PreconditionError: for an order out of range
    """
    if sequence is None:
        sequence = freeman_sequence(a)
    if not isinstance(order, int) or order < 1 or order > sequence.stabilization_index + 1:
        raise PreconditionError(
            f"Levi order must be between 1 and {sequence.stabilization_index + 1}, got {order}"
        )
    h = order - 1
    source = sequence.steps[h]
    sub = source.sum(a.tau_f)
    if h == 0:
        big = en.Subspace.full(a.g.dim)
    else:
        big = sequence.steps[h - 1].sum(a.tau_f)
    target = big.quotient_basis(sub)
    rows = source.complement_in(a.isotropy)
    cols = [a.tau.apply(w) for w in a.f.complement_in(a.isotropy)]
    return LeviMatrix(a, order, rows, cols, target, source, sub)


class PartialComplexStructure(object):
    """
    J on D = ((f + tau f) ∩ g^tau) / t^tau, determined by X + iJX in f.

    Real vectors of g are handled through ``realify`` (Re part, Im part).

    :ivar basis:  (list)  complex vectors representing a basis of D
    :ivar matrix: (list)  real matrix of J in that basis, column j = coordinates of J basis[j]
    """

    def __init__(self, a, basis, matrix, real_isotropy):
        self.a = a
        self.basis = basis
        self.matrix = matrix
        self._real_isotropy = real_isotropy
        self._real_space = en.Subspace.span(
            [en.realify(b) for b in basis] + list(real_isotropy.basis), 2 * a.g.dim
        )

    @property
    def dim(self):
        return len(self.basis)

    def coordinates(self, x):
        """Real coordinates of the class of x in D."""
        coords = en.solve(
            [en.realify(b) for b in self.basis] + list(self._real_isotropy.basis), en.realify(x)
        )
        if coords is None:
            raise PreconditionError(f"{self.a.label(x)} is not a real vector of f + tau(f)")
        return coords[: self.dim]

    def apply(self, x):
        """A representative of J(class of x)."""
        coords = self.coordinates(x)
        image = [sum((self.matrix[i][j] * coords[j] for j in range(self.dim)), en.ZERO) for i in range(self.dim)]
        return en.linear_combination(image, self.basis, self.a.g.dim)

    def same_class(self, x, y):
        """x = y mod t^tau (both real vectors of f + tau f)."""
        return self._real_isotropy.contains(en.realify(en.vsub(x, y)))

    def squares_to_minus_identity(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                entry = sum((self.matrix[i][m] * self.matrix[m][j] for m in range(n)), en.ZERO)
                if entry != (-en.ONE if i == j else en.ZERO):
                    return False
        return True


def _real_span(tau, complex_space, n):
    """Real span of the tau-fixed vectors of a tau-stable complex subspace, realified."""
    vectors = []
    for s in complex_space.basis:
        ts = tau.apply(s)
        vectors.append(en.realify(en.vadd(s, ts)))
        vectors.append(en.realify(en.vscale(en.I, en.vsub(s, ts))))
    return en.Subspace.span(vectors, 2 * n)


def partial_complex_structure(a):
    """
    :raises PartialComplexStructureError: if some X has no Y with X + iY in f, or the
                                          class of Y is not unique
    """
    n = a.g.dim
    tau = a.tau
    real_space = _real_span(tau, a.f_plus_tau_f, n)
    real_isotropy = _real_span(tau, a.isotropy, n)
    basis = [en.complexify(r) for r in real_space.complement_in(real_isotropy)]

    # Z = sum (alpha_m + i beta_m) f_m has Z + tau Z = sum alpha_m (f_m + tau f_m) + beta_m i(f_m - tau f_m)
    f_basis = list(a.f.basis)
    columns = []
    for fm in f_basis:
        tfm = tau.apply(fm)
        columns.append(en.realify(en.vadd(fm, tfm)))
    for fm in f_basis:
        tfm = tau.apply(fm)
        columns.append(en.realify(en.vscale(en.I, en.vsub(fm, tfm))))
    nf = len(f_basis)

    def z_from(solution):
        coeffs = [en.QQ_I(solution[m].x, solution[nf + m].x) for m in range(nf)]
        return en.linear_combination(coeffs, f_basis, n)

    def y_from(z):
        # Y = (Z - tau Z) / 2i
        return en.vscale(en.invert(en.scalar(2) * en.I), en.vsub(z, tau.apply(z)))

    # a solution of the homogeneous system shifts Y; it must stay inside t^tau
    if columns:
        homogeneous = en.kernel(en.matrix([[c[r] for c in columns] for r in range(2 * n)], len(columns)))
        for sol in homogeneous.basis:
            if not real_isotropy.contains(en.realify(y_from(z_from(sol)))):
                raise PartialComplexStructureError("the class of Y is not unique")

    coordinate_columns = [en.realify(b) for b in basis] + list(real_isotropy.basis)
    d = len(basis)
    matrix = [[en.ZERO] * d for _ in range(d)]
    for j, x in enumerate(basis):
        solution = en.solve(columns, en.realify(en.vscale(2, x)))
        if solution is None:
            raise PartialComplexStructureError(f"no Y with {a.label(x)} + iY in f")
        y = y_from(z_from(solution))
        coords = en.solve(coordinate_columns, en.realify(y))
        if coords is None:
            raise PartialComplexStructureError(f"J({a.label(x)}) leaves (f + tau f) ∩ g^tau")
        for i in range(d):
            matrix[i][j] = coords[i]
    pcs = PartialComplexStructure(a, basis, matrix, real_isotropy)
    if not pcs.squares_to_minus_identity():
        raise PartialComplexStructureError("J does not square to -1")
    return pcs
