"""
The family of graded CR algebras g = sl2(C) + V built on the (2k+1)-dimensional
irreducible sl2-module V of degree-2k polynomials in (z, zbar).

Basis order of g: X-, H, X+, v-k, ..., v0, ..., vk with grades -1, 0, 1, -k, ..., k, where
v_h stands for z^(k+h) zbar^(k-h) and sl2 acts by H = z d/dz - zbar d/dzbar,
X+ = z d/dzbar, X- = zbar d/dz.
"""
from cr_workbench import exactnum as en
from cr_workbench import liecore
from cr_workbench.exceptions import PreconditionError

SL2_LABELS = ("X-", "H", "X+")
X_DOWN, H, X_UP = range(3)


def check_k(k):
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise PreconditionError(f"The family is defined for integers k >= 1, got {k!r}")


def v_label(h):
    return f"v{h}"


def v_index(k, h):
    """Position of v_h in the basis of g."""
    if not -k <= h <= k:
        raise IndexError(f"v{h} is not a weight vector for k={k}")
    return 3 + k + h


def build_sl2():
    """sl2(C) with [H, X-] = -2X-, [H, X+] = 2X+, [X+, X-] = H, graded -1, 0, 1."""
    structure = {
        (X_DOWN, H): en.vector([2, 0, 0]),  # [X-, H] = 2X-
        (H, X_UP): en.vector([0, 0, 2]),
        (X_DOWN, X_UP): en.vector([0, -1, 0]),  # [X-, X+] = -H
    }
    return liecore.LieAlgebra(SL2_LABELS, structure, grades=[-1, 0, 1])


def _action(k):
    """(output h, coefficient) of H, X+ and X- on v_h."""
    return {
        "H": lambda h: (h, 2 * h),
        "X+": lambda h: (h + 1, k - h),
        "X-": lambda h: (h - 1, k + h),
    }


def irrep_action(k):
    """
    The matrices of H, X+ and X- on V = span(v-k, ..., vk).

    :param k: (int) k >= 1

    :return: (dict) {"H": DomainMatrix, "X+": DomainMatrix, "X-": DomainMatrix}, column h+k is the
             image of v_h
    """
    check_k(k)
    n = 2 * k + 1
    out = {}
    for name, act in _action(k).items():
        rows = [[en.ZERO] * n for _ in range(n)]
        for h in range(-k, k + 1):
            target, coeff = act(h)
            if coeff and -k <= target <= k:
                rows[target + k][h + k] = en.scalar(coeff)
        out[name] = en.matrix(rows, n)
    return out


class FamilyInstance(object):
    """The k-th member of the family: the algebra g, the involution tau and the subalgebra f."""

    def __init__(self, k, g, tau, f):
        self.k = k
        self.g = g
        self.tau = tau
        self.f = f

    def cr_algebra(self):
        from cr_workbench.cralg import CRAlgebra

        return CRAlgebra(self.g, self.tau, self.f)

    def v(self, h):
        return self.g.basis_vector(v_index(self.k, h))

    def expected_freeman_step(self, h):
        """span(H, v_{h+1}, ..., v_k), the closed form of the h-th Freeman step."""
        return self.g.span(["H"] + [v_label(j) for j in range(h + 1, self.k + 1)])


def family_algebra(k):
    """The graded semidirect product sl2(C) + V, without validity gates."""
    check_k(k)
    labels = list(SL2_LABELS) + [v_label(h) for h in range(-k, k + 1)]
    n = len(labels)
    grades = [-1, 0, 1] + list(range(-k, k + 1))
    sl2 = build_sl2()
    structure = {}
    for pair in sl2.nonzero_pairs:
        structure[pair] = sl2.structure_constants(*pair) + en.zero_vector(n - 3)
    sl2_positions = {"X-": X_DOWN, "H": H, "X+": X_UP}
    for name, act in _action(k).items():
        x = sl2_positions[name]
        for h in range(-k, k + 1):
            target, coeff = act(h)
            if coeff and -k <= target <= k:
                # [X, v_h] = rho(X) v_h; [V, V] = 0
                structure[(x, v_index(k, h))] = en.vscale(coeff, en.unit_vector(n, v_index(k, target)))
    return liecore.LieAlgebra(labels, structure, grades=grades)


def build_tau(k):
    """
    tau(H) = -H, tau(X+) = -X-, tau(X-) = -X+ and tau(v_h) = (-1)^h v_-h, extended antilinearly.

    The alternating sign on V is forced by tau[X+, v_h] = [tau X+, tau v_h] once tau(v0) = v0.
    """
    check_k(k)
    n = 2 * k + 4
    rows = [[en.ZERO] * n for _ in range(n)]
    rows[X_UP][X_DOWN] = -en.ONE
    rows[H][H] = -en.ONE
    rows[X_DOWN][X_UP] = -en.ONE
    for h in range(-k, k + 1):
        rows[v_index(k, -h)][v_index(k, h)] = en.scalar((-1) ** (h % 2))
    return liecore.AntilinearMap.from_rows(rows)


def build_family(k):
    """
    Build and validate the k-th family member.

    :raises InvalidStructure: if any structural gate fails (which would be a bug)
    """
    g = family_algebra(k)
    tau = build_tau(k)
    f = g.span(["H", "X+"] + [v_label(h) for h in range(1, k + 1)])
    liecore.require(liecore.check_jacobi(g))
    liecore.require(liecore.check_grading(g))
    liecore.require(liecore.check_involution(g, tau))
    liecore.require(liecore.check_subalgebra(g, f))
    return FamilyInstance(k, g, tau, f)


def pauli_basis():
    """sigma1 = (X+ - X-)/2, sigma2 = i(X+ + X-)/2, sigma3 = iH/2 in sl2 coordinates."""
    half, ihalf = en.HALF, en.I * en.HALF
    sigma1 = (-half, en.ZERO, half)
    sigma2 = (ihalf, en.ZERO, ihalf)
    sigma3 = (en.ZERO, ihalf, en.ZERO)
    return sigma1, sigma2, sigma3


def family_pauli(k):
    """The Pauli basis embedded in g."""
    pad = en.zero_vector(2 * k + 1)
    return tuple(s + pad for s in pauli_basis())


def characteristic_element(k):
    """E = H/2; ad(E) is the grading derivation of g."""
    e = [en.ZERO] * (2 * k + 4)
    e[H] = en.HALF
    return tuple(e)


def build_su2_borel():
    """The totally complex pair (su(2), b) with b = span(H, X+): the CP^1 control case."""
    from cr_workbench.cralg import CRAlgebra

    g = build_sl2()
    tau = liecore.AntilinearMap.from_rows([[0, 0, -1], [0, -1, 0], [-1, 0, 0]])
    return CRAlgebra(g, tau, g.span(["H", "X+"]))


def weight_rotation_sign(k, pcs=None):
    """
    Compare the partial complex structure of the k-th family member with the rotations
    (1/h) ad(sigma3) on the V-directions v_h + tau v_h, i(v_h - tau v_h) and with ad(sigma3)
    on the su(2)-directions sigma1, sigma2.

    :return: (dict) {"sign": +1, -1 or None, "directions": {name: sign or None}}; sign is the
             common sign e with J = e (1/h) ad(sigma3), None if the directions disagree
    """
    from cr_workbench.cralg import partial_complex_structure

    family = build_family(k)
    a = family.cr_algebra()
    if pcs is None:
        pcs = partial_complex_structure(a)
    g, tau = family.g, family.tau
    sigma1, sigma2, sigma3 = family_pauli(k)

    directions = {"sigma1": (sigma1, en.ONE), "sigma2": (sigma2, en.ONE)}
    for h in range(1, k + 1):
        vh = family.v(h)
        tvh = tau.apply(vh)
        directions[f"v{h} + tau v{h}"] = (en.vadd(vh, tvh), en.scalar(en.QQ(1, h)))
        directions[f"i(v{h} - tau v{h})"] = (en.vscale(en.I, en.vsub(vh, tvh)), en.scalar(en.QQ(1, h)))

    signs = {}
    for name, (x, factor) in directions.items():
        jx = pcs.apply(x)
        rotated = en.vscale(factor, g.bracket(sigma3, x))
        sign = None
        for candidate in (1, -1):
            if pcs.same_class(jx, en.vscale(candidate, rotated)):
                sign = candidate
        signs[name] = sign
    values = set(signs.values())
    common = values.pop() if len(values) == 1 else None
    return {"sign": common, "directions": signs}
