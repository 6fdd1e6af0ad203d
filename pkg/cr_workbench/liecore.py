"""
Finite-dimensional complex Lie algebras given by structure constants.

The structure table holds the coordinates of [e_i, e_j] for i < j; the rest of the table
follows from antisymmetry. Gradings are optional metadata: they are checked, never used
to shortcut a bracket.
"""
from cr_workbench import exactnum as en
from cr_workbench.exceptions import DimensionMismatch, InvalidStructure
from cr_workbench.utils.reports import Report


class LieAlgebra(object):
    """
    :param basis_labels: (list of str)   names of the basis vectors e_0 .. e_{n-1}
    :param structure:    (dict)          {(i, j): vector} for i < j; missing pairs bracket to zero
    :param grades:       (list of int)   optional grade of every basis vector
    """

    def __init__(self, basis_labels, structure, grades=None):
        self.basis_labels = tuple(basis_labels)
        self.dim = len(self.basis_labels)
        if len(set(self.basis_labels)) != self.dim:
            raise ValueError("Basis labels must be unique")
        if grades is not None and len(grades) != self.dim:
            raise DimensionMismatch("grades", self.dim, len(grades))
        self.grades = tuple(grades) if grades is not None else None
        self._table = {}
        for (i, j), coords in structure.items():
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise IndexError(f"Bracket index out of range: ({i}, {j})")
            if i == j:
                if not en.is_zero_vector(coords):
                    raise ValueError(f"[e_{i}, e_{i}] must vanish")
                continue
            coords = en.vector(coords)
            if len(coords) != self.dim:
                raise DimensionMismatch(f"bracket ({i}, {j})", self.dim, len(coords))
            if i > j:
                i, j, coords = j, i, en.vneg(coords)
            if en.is_zero_vector(coords):
                continue
            self._table[(i, j)] = coords

    def structure_constants(self, i, j):
        """Coordinates of [e_i, e_j]."""
        if i == j:
            return en.zero_vector(self.dim)
        if i < j:
            return self._table.get((i, j), en.zero_vector(self.dim))
        return en.vneg(self._table.get((j, i), en.zero_vector(self.dim)))

    @property
    def nonzero_pairs(self):
        return sorted(self._table)

    def basis_vector(self, label_or_index):
        return en.unit_vector(self.dim, self.index(label_or_index))

    def index(self, label_or_index):
        if isinstance(label_or_index, int):
            return label_or_index
        try:
            return self.basis_labels.index(label_or_index)
        except ValueError:
            raise KeyError(f"No basis vector named '{label_or_index}'")

    def element(self, coeffs):
        """Vector from a {label: scalar} mapping."""
        v = [en.ZERO] * self.dim
        for label, c in coeffs.items():
            v[self.index(label)] += en.scalar(c)
        return tuple(v)

    def describe(self, v):
        """Readable linear combination of basis labels."""
        terms = []
        for c, label in zip(v, self.basis_labels):
            if not c:
                continue
            if c == en.ONE:
                terms.append(label)
            elif c == -en.ONE:
                terms.append("-" + label)
            else:
                text = en.format_scalar(c)
                if " " in text:
                    text = f"({text})"
                terms.append(f"{text}*{label}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def bracket(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("bracket", self.dim, (len(x), len(y)))
        out = [en.ZERO] * self.dim
        for (i, j), coords in self._table.items():
            c = x[i] * y[j] - x[j] * y[i]
            if c:
                for m, a in enumerate(coords):
                    if a:
                        out[m] += c * a
        return tuple(out)

    def span(self, labels_or_vectors):
        vectors = [
            self.basis_vector(x) if isinstance(x, (str, int)) else tuple(x)
            for x in labels_or_vectors
        ]
        return en.Subspace.span(vectors, self.dim)


def check_jacobi(g):
    """
    Check the Jacobi identity on every index triple i < j < l.

    :return: (Report) one failing check per violating triple; valid iff empty
    """
    report = Report("jacobi")
    n = g.dim
    e = [en.unit_vector(n, i) for i in range(n)]
    violations = []
    for i in range(n):
        for j in range(i + 1, n):
            for m in range(j + 1, n):
                total = en.vadd(
                    en.vadd(
                        g.bracket(e[i], g.bracket(e[j], e[m])),
                        g.bracket(e[j], g.bracket(e[m], e[i])),
                    ),
                    g.bracket(e[m], g.bracket(e[i], e[j])),
                )
                if not en.is_zero_vector(total):
                    violations.append((i, j, m))
                    report.add(
                        f"Jacobi ({g.basis_labels[i]}, {g.basis_labels[j]}, {g.basis_labels[m]})",
                        False,
                        detail=g.describe(total),
                    )
    report.data["violations"] = [list(t) for t in violations]
    return report


def check_grading(g):
    """Every nonzero coordinate of [e_i, e_j] must sit in grade grade(i) + grade(j)."""
    report = Report("grading")
    if g.grades is None:
        report.data["graded"] = False
        return report
    report.data["graded"] = True
    for (i, j) in g.nonzero_pairs:
        coords = g.structure_constants(i, j)
        target = g.grades[i] + g.grades[j]
        bad = [g.basis_labels[m] for m, a in enumerate(coords) if a and g.grades[m] != target]
        if bad:
            report.add(
                f"grade of [{g.basis_labels[i]}, {g.basis_labels[j]}] is {target}",
                False,
                detail="components in " + ", ".join(bad),
            )
    return report


def check_grading_element(g, e):
    """ad(e) must act on every basis vector as multiplication by its grade."""
    report = Report("grading element")
    if g.grades is None:
        report.add("algebra carries a grading", False)
        return report
    for i in range(g.dim):
        basis_vec = en.unit_vector(g.dim, i)
        expected = en.vscale(g.grades[i], basis_vec)
        got = g.bracket(e, basis_vec)
        report.add(f"ad(E) {g.basis_labels[i]} = {g.grades[i]} {g.basis_labels[i]}", got == expected)
    return report


def is_subalgebra(g, s):
    if s.ambient_dim != g.dim:
        raise DimensionMismatch("subalgebra test", g.dim, s.ambient_dim)
    basis = s.basis
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if not s.contains(g.bracket(basis[a], basis[b])):
                return False
    return True


def check_subalgebra(g, s, name="f"):
    """Report whether s is closed under the bracket of g."""
    report = Report("subalgebra")
    report.add(f"{name} is a subalgebra of g", s.ambient_dim == g.dim and is_subalgebra(g, s))
    return report


class AntilinearMap(object):
    """x -> T conj(x) in the fixed basis."""

    def __init__(self, matrix):
        self.matrix = matrix
        rows, cols = matrix.shape
        if rows != cols:
            raise DimensionMismatch("antilinear map", (rows, rows), (rows, cols))
        self.dim = rows

    @classmethod
    def from_rows(cls, rows):
        return cls(en.matrix(rows, len(rows)))

    def apply(self, x):
        return en.mat_vec(self.matrix, en.vconj(x))

    __call__ = apply

    def image(self, s):
        """The image of a subspace; antilinear maps send subspaces to subspaces."""
        return s.image(self.apply)

    def rows(self):
        return en.rows_of(self.matrix)


def apply_antilinear(t, x):
    return t.apply(x)


def _fixed_point_system(t):
    """Real matrix of x -> T conj(x) - x acting on (Re x, Im x)."""
    n = t.dim
    rows = t.rows()
    real_rows = []
    for i in range(n):
        # real part of (T conj x - x)_i
        real_rows.append(
            [rows[i][j].x - (1 if i == j else 0) for j in range(n)]
            + [rows[i][j].y for j in range(n)]
        )
    for i in range(n):
        # imaginary part of (T conj x - x)_i
        real_rows.append(
            [rows[i][j].y for j in range(n)]
            + [-rows[i][j].x - (1 if i == j else 0) for j in range(n)]
        )
    return en.matrix(real_rows, 2 * n)


def fixed_real_dimension(t):
    return 2 * t.dim - en.rank(_fixed_point_system(t))


def real_form_basis(t):
    """A real basis of the fixed-point set of t, returned as complex vectors."""
    fixed = en.kernel(_fixed_point_system(t))
    return [en.complexify(r) for r in fixed.basis]


def check_involution(g, t):
    """
    Check that t is an involutive antilinear automorphism of g whose real form has real
    dimension g.dim.
    """
    report = Report("involution")
    if t.dim != g.dim:
        report.add("size of tau matches the algebra", False, detail=f"{t.dim} != {g.dim}")
        return report
    n = g.dim
    squared = en.mat_mul(t.matrix, en.mat_conj(t.matrix))
    report.add("tau is an involution", en.rows_of(squared) == en.rows_of(en.identity(n)))
    e = [en.unit_vector(n, i) for i in range(n)]
    images = [t.apply(v) for v in e]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = t.apply(g.structure_constants(i, j))
            rhs = g.bracket(images[i], images[j])
            if lhs != rhs:
                report.add(
                    f"tau[{g.basis_labels[i]}, {g.basis_labels[j]}] = [tau {g.basis_labels[i]}, "
                    f"tau {g.basis_labels[j]}]",
                    False,
                    detail=f"{g.describe(lhs)} != {g.describe(rhs)}",
                )
    real_dim = fixed_real_dimension(t)
    report.data["real_form_dim"] = real_dim
    report.add("real form has real dimension dim g", real_dim == n, detail=f"{real_dim}")
    return report


def require(report):
    """Turn a failing report into InvalidStructure."""
    if not report.passed:
        raise InvalidStructure(report)
    return report
