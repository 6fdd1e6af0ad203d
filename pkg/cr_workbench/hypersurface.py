"""
Polynomial vector fields on C^(k+2) and the model hypersurface

    Re(w) = 2 sum_{h=1..k} Re(z0^h zbar_h)

z, zbar, w, wbar (and t = Im w) are independent formal variables of one polynomial ring over
Q(i). A real-analytic identity on the hypersurface holds iff it holds formally after
eliminating Re(w).

The verification suites return one Report each. Gated checks decide the verdict; recorded
checks compare against printed formulas that the computation does not reproduce.
"""
import functools
import itertools

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.orderings import grlex
from sympy.polys.rings import xring

from cr_workbench import exactnum as en
from cr_workbench import liecore
from cr_workbench import su2family
from cr_workbench.exceptions import DegreeBoundExceeded, DimensionMismatch
from cr_workbench.utils.config import get_config
from cr_workbench.utils.reports import Report


def bar_name(name):
    """The conjugate variable (or direction) name; t is real."""
    if name == "t":
        return name
    if name == "w":
        return "wb"
    if name == "wb":
        return "w"
    if name.startswith("zb"):
        return "z" + name[2:]
    return "zb" + name[1:]


class ModelRing(object):
    """
    The polynomial ring over Q(i) in t, z0..zk, zb0..zbk, w, wb with grlex order.

    :ivar holomorphic: directions of a HoloField (w, z0, ..., zk)
    :ivar directions:  directions of a RealField (w, wb, z0, ..., zk, zb0, ..., zbk)
    """

    def __init__(self, k):
        su2family.check_k(k)
        self.k = k
        z_names = [f"z{h}" for h in range(k + 1)]
        zb_names = [f"zb{h}" for h in range(k + 1)]
        self.names = ["t"] + z_names + zb_names + ["w", "wb"]
        self.R, gens = xring(",".join(self.names), QQ_I, grlex)
        self.gens = dict(zip(self.names, gens))
        self.holomorphic = tuple(["w"] + z_names)
        self.directions = tuple(["w", "wb"] + z_names + zb_names)
        index = {name: i for i, name in enumerate(self.names)}
        self._bar_perm = [index[bar_name(name)] for name in self.names]

    def __getitem__(self, name):
        return self.gens[name]

    def z(self, h):
        return self.gens[f"z{h}"]

    def zb(self, h):
        return self.gens[f"zb{h}"]

    def poly(self, value):
        return self.R.ring_new(value)

    def bar(self, p):
        """Swap every variable with its conjugate and conjugate the coefficients."""
        out = {}
        for monom, coeff in p.terms():
            new = [0] * len(monom)
            for i, e in enumerate(monom):
                new[self._bar_perm[i]] = e
            out[tuple(new)] = en.conjugate(coeff)
        return self.R.from_dict(out)

    def format(self, p):
        if not p:
            return "0"
        terms = []
        for monom, coeff in p.terms():
            factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(self.names, monom) if e]
            text = en.format_scalar(coeff)
            if " " in text:
                text = f"({text})"
            if not factors:
                terms.append(text)
            elif coeff == en.ONE:
                terms.append("*".join(factors))
            elif coeff == -en.ONE:
                terms.append("-" + "*".join(factors))
            else:
                terms.append(text + "*" + "*".join(factors))
        return " + ".join(terms).replace("+ -", "- ")


@functools.lru_cache(maxsize=None)
def model_ring(k):
    return ModelRing(k)


def bar(p, k):
    return model_ring(k).bar(p)


def evaluate(p, values):
    """Value of p at a point given as {variable name: scalar}; missing variables count as 0."""
    ring_names = p.ring.symbols
    point = [values.get(str(s), en.ZERO) for s in ring_names]
    total = en.ZERO
    for monom, coeff in p.terms():
        term = coeff
        for v, e in zip(point, monom):
            for _ in range(e):
                term = term * v
        total += term
    return total


class VectorField(object):
    """
    sum_d coefficients[d] * d/dd over directions of the model ring.

    Zero coefficients are dropped, so two fields are equal iff their coefficient maps are.
    """

    def __init__(self, k, coefficients):
        self.k = k
        self.ring = model_ring(k)
        coeffs = {}
        for d, c in coefficients.items():
            c = self.ring.poly(c)
            if not c:
                continue
            if d not in self._allowed_directions():
                raise KeyError(f"{type(self).__name__} has no direction '{d}'")
            coeffs[d] = c
        self.coefficients = {d: coeffs[d] for d in self.ring.directions if d in coeffs}
        self._validate()

    def _allowed_directions(self):
        return self.ring.directions

    def _validate(self):
        pass

    def __getitem__(self, d):
        return self.coefficients.get(d, self.ring.R.zero)

    def _same_k(self, other, what):
        if self.k != other.k:
            raise DimensionMismatch(what, self.k, other.k)

    def _result_type(self, other):
        return type(self) if type(self) is type(other) else VectorField

    def apply(self, p):
        """The derivative of p along the field."""
        out = self.ring.R.zero
        for d, c in self.coefficients.items():
            out += c * p.diff(self.ring[d])
        return out

    def bracket(self, other):
        """[a, b]_d = a(b_d) - b(a_d)."""
        self._same_k(other, "field bracket")
        coeffs = {}
        for d in self.ring.directions:
            coeffs[d] = self.apply(other[d]) - other.apply(self[d])
        return self._result_type(other)(self.k, coeffs)

    def __add__(self, other):
        self._same_k(other, "field sum")
        return self._result_type(other)(self.k, {d: self[d] + other[d] for d in self.ring.directions})

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)(self.k, {d: -c for d, c in self.coefficients.items()})

    def scale(self, c):
        c = en.scalar(c)
        return type(self)(self.k, {d: p * c for d, p in self.coefficients.items()})

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.k == other.k and self.coefficients == other.coefficients

    __hash__ = None

    def is_zero(self):
        return not self.coefficients

    def degree(self):
        """Largest total degree among the coefficients (0 for the zero field)."""
        return max((sum(m) for p in self.coefficients.values() for m in p.monoms()), default=0)

    def vanishes_at_origin(self):
        zero = self.ring.R.zero_monom
        return all(p.get(zero, en.ZERO) == en.ZERO for p in self.coefficients.values())

    def describe(self):
        if not self.coefficients:
            return "0"
        return " + ".join(f"({self.ring.format(c)}) d/d{d}" for d, c in self.coefficients.items())

    def __repr__(self):
        return f"{type(self).__name__}(k={self.k}, {self.describe()})"


class HoloField(VectorField):
    """A field in the directions w, z0, ..., zk with coefficients in w, z0, ..., zk only."""

    def _allowed_directions(self):
        return self.ring.holomorphic

    def _validate(self):
        allowed = {self.ring.names.index(n) for n in self.ring.holomorphic}
        for d, c in self.coefficients.items():
            for monom in c.monoms():
                if any(e and i not in allowed for i, e in enumerate(monom)):
                    raise ValueError(f"Coefficient of d/d{d} is not holomorphic: {self.ring.format(c)}")


class RealField(VectorField):
    """A field whose d/dzb_j (d/dwb) coefficient is the conjugate of its d/dz_j (d/dw) one."""

    def _validate(self):
        t_index = self.ring.names.index("t")
        for d, c in self.coefficients.items():
            if any(m[t_index] for m in c.monoms()):
                raise ValueError("Field coefficients may not depend on t")
            if self[bar_name(d)] != self.ring.bar(c):
                raise ValueError(f"Not a real field: d/d{d} and d/d{bar_name(d)} are not conjugate")

    def scale(self, c):
        c = en.scalar(c)
        if not en.is_real(c):
            return VectorField(self.k, {d: p * c for d, p in self.coefficients.items()})
        return super().scale(c)


def field_bracket(a, b):
    return a.bracket(b)


def conjugate_field(x):
    """Conjugate every coefficient and move it to the conjugate direction."""
    return VectorField(x.k, {bar_name(d): x.ring.bar(c) for d, c in x.coefficients.items()})


def real_part(x):
    """Re(Z) as the real field Z + conj(Z); it acts on real functions as 2 Re Z."""
    conj = conjugate_field(x)
    return RealField(x.k, {d: x[d] + conj[d] for d in x.ring.directions})


def defining_function(k):
    """rho = (w + wb)/2 - sum_h (z0^h zb_h + zb0^h z_h)."""
    ring = model_ring(k)
    return (ring["w"] + ring["wb"]) * en.HALF - level_function(k)


def level_function(k):
    """Re(w) on the hypersurface: sum_h (z0^h zb_h + zb0^h z_h)."""
    ring = model_ring(k)
    s = ring.R.zero
    for h in range(1, k + 1):
        s += ring.z(0) ** h * ring.zb(h) + ring.zb(0) ** h * ring.z(h)
    return s


def tangency_residual(field):
    """
    Re(Z) applied to rho, with w = s + it and wb = s - it substituted; Z is tangent iff this
    vanishes. Non-real fields are replaced by their real part.
    """
    real = field if isinstance(field, RealField) else real_part(field)
    ring = real.ring
    g = real.apply(defining_function(real.k))
    s = level_function(real.k)
    it = ring["t"] * en.I
    return g.compose([(ring["w"], s + it), (ring["wb"], s - it)])


def tangency(field, k=None):
    if k is not None and k != field.k:
        raise DimensionMismatch("tangency", k, field.k)
    return not tangency_residual(field)


real_tangency = tangency


def hypersurface_point(k, rng, bound=5):
    """A random point of the hypersurface with Gaussian rational coordinates."""
    values = {}
    zs = [en.random_scalar(rng, bound) for _ in range(k + 1)]
    for h, z in enumerate(zs):
        values[f"z{h}"] = z
        values[f"zb{h}"] = en.conjugate(z)
    s = en.ZERO
    for h in range(1, k + 1):
        s += zs[0] ** h * en.conjugate(zs[h]) + en.conjugate(zs[0]) ** h * zs[h]
    t = en.random_scalar(rng, bound, real=True)
    values["t"] = t
    values["w"] = s + en.I * t
    values["wb"] = s - en.I * t
    return values


def spot_check(field, rng, points=20):
    """Evaluate Re(Z)(rho) at random points of the hypersurface; True iff it always vanishes."""
    real = field if isinstance(field, RealField) else real_part(field)
    g = real.apply(defining_function(real.k))
    for _ in range(points):
        if evaluate(g, hypersurface_point(real.k, rng)):
            return False
    return True


def proportionality(a, b):
    """The scalar c with a = c b, or None."""
    if b.is_zero():
        return en.ZERO if a.is_zero() else None
    d = next(iter(b.coefficients))
    lead = b[d]
    monom = lead.LM
    c = en.divide(a[d].get(monom, en.ZERO), lead.get(monom))
    return c if a == b.scale(c) else None


def check_degree(name, field):
    bound = get_config()["max_field_degree"]
    degree = field.degree()
    if degree > bound:
        raise DegreeBoundExceeded(name, degree, bound)


# -- the catalogue ---------------------------------------------------------------------


def _q(p, r=1):
    return en.scalar(QQ(p, r))


def _iq(p, r=1):
    return en.gq(0, QQ(p, r))


def abelian_names(k):
    names = [f"Z{h}" for h in range(1, k + 1)] + [f"Z'{h}" for h in range(1, k + 1)] + ["W"]
    pairs = list(itertools.combinations(range(1, k + 1), 2))
    names += [f"A{h},{j}" for h, j in pairs] + [f"A'{h},{j}" for h, j in pairs]
    names += [f"A'{h}" for h in range(1, k + 1)]
    return names


@functools.lru_cache(maxsize=None)
def _catalogue(k):
    ring = model_ring(k)
    w = ring["w"]
    z = [ring.z(h) for h in range(k + 1)]
    z0 = z[0]
    half = en.HALF
    fields = {}
    for h in range(1, k + 1):
        fields[f"Z{h}"] = HoloField(k, {f"z{h}": half, "w": z0**h})
    for h in range(1, k + 1):
        fields[f"Z'{h}"] = HoloField(k, {f"z{h}": _iq(1, 2), "w": z0**h * -en.I})
    fields["W"] = HoloField(k, {"w": en.I})
    pairs = list(itertools.combinations(range(1, k + 1), 2))
    for h, j in pairs:
        fields[f"A{h},{j}"] = HoloField(k, {f"z{j}": z0**h * half, f"z{h}": z0**j * -half})
    for h, j in pairs:
        fields[f"A'{h},{j}"] = HoloField(k, {f"z{j}": z0**h * _iq(-1, 2), f"z{h}": z0**j * _iq(-1, 2)})
    for h in range(1, k + 1):
        fields[f"A'{h}"] = HoloField(k, {f"z{h}": z0**h * en.I})

    fields["E"] = HoloField(
        k, dict({"w": w * (k + 1), "z0": z0}, **{f"z{h}": z[h] * (k + 1 - h) for h in range(1, k + 1)})
    )
    fields["J"] = HoloField(
        k, dict({"z0": z0 * -en.I}, **{f"z{h}": z[h] * _iq(-h) for h in range(1, k + 1)})
    )
    fields["K"] = HoloField(k, dict({"z0": -z0}, **{f"z{h}": z[h] * h for h in range(1, k + 1)}))

    lower = {"z0": ring.poly(k), "w": z[1] * (2 * k)}
    lower_prime = {"z0": ring.poly(_iq(k)), "w": z[1] * _iq(-2 * k)}
    for h in range(1, k):
        lower[f"z{h}"] = z[h + 1] * (-k * (h + 1))
        lower_prime[f"z{h}"] = z[h + 1] * _iq(k * (h + 1))
    fields["Z-"] = HoloField(k, lower)
    fields["Z'-"] = HoloField(k, lower_prime)

    upper = {"z0": z0**2 * _q(1, k), "w": z0 * w, "z1": z[1] * z0 - w * half}
    upper_prime = {"z0": z0**2 * _iq(-1, k), "w": z0 * w * -en.I, "z1": z[1] * z0 * -en.I + w * _iq(-1, 2)}
    for h in range(1, k):
        upper[f"z{h + 1}"] = z[h + 1] * z0 + z[h] * _q(k - h, k)
        upper_prime[f"z{h + 1}"] = z[h + 1] * z0 * -en.I + z[h] * _iq(k - h, k)
    fields["Z+"] = HoloField(k, upper)
    fields["Z'+"] = HoloField(k, upper_prime)

    fields["H"] = HoloField(
        k, dict({"w": w * (2 * k), "z0": z0 * 2}, **{f"z{h}": z[h] * (2 * (k - h)) for h in range(1, k + 1)})
    )
    return fields


def catalogue(k):
    """
    Every named field on the model hypersurface: Zh, Z'h, W, Ah,j, A'h,j, A'h (the abelian part),
    E, J, K, Z-, Z'-, Z+, Z'+ and H.
    """
    return dict(_catalogue(k))


# -- verification suites ---------------------------------------------------------------


def _zero(k):
    return HoloField(k, {})


def _expect(report, name, lhs, rhs, gated=True):
    ok = lhs == rhs
    detail = None if ok else f"{lhs.describe()} != {rhs.describe()}"
    report.add(name, ok, gated=gated, detail=detail)


def _expect_tangent(report, name, field, gated=True):
    report.add(f"Re({name}) is tangent", tangency(field), gated=gated)


def _guard(fields):
    for name, field in fields.items():
        check_degree(name, field)


def _flatten(fields):
    """Coefficient tuples of the fields, indexed by (direction, monomial)."""
    keys = sorted({(d, m) for f in fields for d, p in f.coefficients.items() for m in p.monoms()})
    return [tuple(f[d].get(m, en.ZERO) for d, m in keys) for f in fields]


def verify_abelian(k, fields=None):
    """
    The (k+1)^2 fields Zh, Z'h, W, Ah,j, A'h,j, A'h: tangent, pairwise commuting and linearly
    independent over R.

    :param fields: (dict) optional replacement for the catalogue fields, by name
    """
    c = catalogue(k)
    if fields is None:
        fields = {name: c[name] for name in abelian_names(k)}
    _guard(fields)
    report = Report("abelian")
    names = list(fields)
    for name in names:
        _expect_tangent(report, name, fields[name])
    zero = _zero(k)
    for a, b in itertools.combinations(names, 2):
        _expect(report, f"[{a}, {b}] = 0", fields[a].bracket(fields[b]), zero)
    rows = [en.realify(v) for v in _flatten([fields[n] for n in names])]
    rank = en.rank(en.matrix(rows)) if rows and rows[0] else 0
    report.add("fields are linearly independent over R", rank == len(names), detail=f"rank {rank}")
    report.data["dimension"] = rank
    return report


def verify_cpx(k):
    c = catalogue(k)
    _guard(c)
    report = Report("cpx")
    J, E, K = c["J"], c["E"], c["K"]
    zero = _zero(k)
    for name in ("E", "J", "K"):
        _expect_tangent(report, name, c[name])
    _expect(report, "[J, E] = 0", J.bracket(E), zero)
    _expect(report, "[K, E] = 0", K.bracket(E), zero)
    _expect(report, "[J, K] = 0", J.bracket(K), zero)
    for h in range(1, k + 1):
        _expect(report, f"[J, Z{h}] = {h} Z'{h}", J.bracket(c[f"Z{h}"]), c[f"Z'{h}"].scale(h))
        _expect(report, f"[J, Z'{h}] = -{h} Z{h}", J.bracket(c[f"Z'{h}"]), c[f"Z{h}"].scale(-h))
        _expect(report, f"[J, A'{h}] = 0", J.bracket(c[f"A'{h}"]), zero)
    _expect(report, "[J, W] = 0", J.bracket(c["W"]), zero)
    for h, j in itertools.combinations(range(1, k + 1), 2):
        a, a_prime = c[f"A{h},{j}"], c[f"A'{h},{j}"]
        _expect(report, f"[J, A{h},{j}] = ({h - j}) A'{h},{j}", J.bracket(a), a_prime.scale(h - j))
        _expect(report, f"[J, A'{h},{j}] = ({j - h}) A{h},{j}", J.bracket(a_prime), a.scale(j - h))
    shift = K + E
    for name in abelian_names(k):
        _expect(report, f"[K + E, {name}] = -{k + 1} {name}", shift.bracket(c[name]), c[name].scale(-(k + 1)))
    return report


def verify_ascdes(k):
    c = catalogue(k)
    _guard(c)
    report = Report("ascdes")
    J, zero = c["J"], _zero(k)
    up, up_p, down, down_p = c["Z+"], c["Z'+"], c["Z-"], c["Z'-"]
    for name in ("Z-", "Z'-", "Z+", "Z'+"):
        _expect_tangent(report, name, c[name])
    _expect(report, "[Z-, Z'-] = 0", down.bracket(down_p), zero)
    _expect(report, "[Z+, Z'+] = 0", up.bracket(up_p), zero)
    _expect(report, "[J, Z-] = Z'-", J.bracket(down), down_p)
    _expect(report, "[J, Z'-] = -Z-", J.bracket(down_p), -down)
    _expect(report, "[J, Z+] = Z'+", J.bracket(up), up_p)
    _expect(report, "[J, Z'+] = -Z+", J.bracket(up_p), -up)

    mixed = (
        ("[Z+, Z'-]", up.bracket(down_p), en.HALF),
        ("[Z'+, Z-]", up_p.bracket(down), -en.HALF),
    )
    for label, lhs, printed in mixed:
        coeff = proportionality(lhs, J)
        observed = en.format_scalar(coeff) if coeff is not None else None
        report.add(f"{label} is a multiple of J", coeff is not None and coeff != en.ZERO, detail=lhs.describe())
        report.record(
            f"{label} = {en.format_scalar(printed)} J as printed",
            coeff == printed,
            detail=f"observed coefficient {observed}",
        )
        report.data[f"{label} / J"] = observed

    shift = c["K"] + c["E"]
    for name in ("Z+", "Z-", "Z'+", "Z'-"):
        _expect(report, f"[K + E, {name}] = 0", shift.bracket(c[name]), zero)
    return report


def verify_sl2(k):
    c = catalogue(k)
    _guard(c)
    report = Report("sl2")
    H = c["H"]
    x_up, x_down = c["Z+"], -c["Z-"]
    _expect(report, "[Z+, -Z-] = H", x_up.bracket(x_down), H)
    _expect(report, "[Z'+, -Z'-] = H", c["Z'+"].bracket(-c["Z'-"]), H)
    _expect(report, "H = 2/(k+1) (k E - K)", (c["E"].scale(k) - c["K"]).scale(_q(2, k + 1)), H)
    _expect_tangent(report, "H", H)
    _expect(report, "[H, Z+] = 2 Z+", H.bracket(x_up), x_up.scale(2))
    _expect(report, "[H, -Z-] = -2 (-Z-)", H.bracket(x_down), x_down.scale(-2))
    for h in range(1, k + 1):
        weight = -2 * (k - h)
        _expect(report, f"[H, Z{h}] = {weight} Z{h}", H.bracket(c[f"Z{h}"]), c[f"Z{h}"].scale(weight))
        _expect(report, f"[H, Z'{h}] = {weight} Z'{h}", H.bracket(c[f"Z'{h}"]), c[f"Z'{h}"].scale(weight))
        weight = 2 * (2 * h - k)
        _expect(report, f"[H, A'{h}] = {weight} A'{h}", H.bracket(c[f"A'{h}"]), c[f"A'{h}"].scale(weight))
    _expect(report, f"[H, W] = {-2 * k} W", H.bracket(c["W"]), c["W"].scale(-2 * k))
    for h, j in itertools.combinations(range(1, k + 1), 2):
        weight = 2 * (h + j - k)
        for name in (f"A{h},{j}", f"A'{h},{j}"):
            _expect(report, f"[H, {name}] = {weight} {name}", H.bracket(c[name]), c[name].scale(weight))
    return report


def su2_generators(k):
    """
    Re of the images of the Pauli basis under X+ -> Z+, X- -> -Z-:
    S1 = Re((Z+ + Z-)/2), S2 = Re(i (Z+ - Z-)/2), S3 = [S1, S2].
    """
    c = catalogue(k)
    up, down = c["Z+"], c["Z-"]
    s1 = real_part((up + down).scale(en.HALF))
    s2 = real_part((up - down).scale(_iq(1, 2)))
    return s1, s2, s1.bracket(s2)


def verify_su2(k):
    c = catalogue(k)
    _guard(c)
    report = Report("su2")
    s1, s2, s3 = su2_generators(k)
    _expect(report, "[S1, S2] = S3", s1.bracket(s2), s3)
    _expect(report, "[S3, S1] = S2", s3.bracket(s1), s2)
    _expect(report, "[S3, S2] = -S1", s3.bracket(s2), -s1)
    up, down = c["Z+"], c["Z-"]
    holo_s3 = (up + down).scale(en.HALF).bracket((up - down).scale(_iq(1, 2)))
    _expect(report, "Re is bracket compatible on the generators", real_part(holo_s3), s3)
    report.record("S3 = Re((i/2) H)", s3 == real_part(c["H"].scale(_iq(1, 2))))
    report.record("S3 = (i/2) Re(H) as printed", s3 == real_part(c["H"]).scale(_iq(1, 2)))
    for name, field in (("S1", s1), ("S2", s2), ("S3", s3)):
        _expect_tangent(report, name, field, gated=False)
    return report


def verify_su2_hol(k):
    """S1 = (Z+ + Z-)/2, S2 = (Z'+ + Z'-)/2, S3 = J: a second su(2) inside hol(M)."""
    c = catalogue(k)
    _guard(c)
    report = Report("su2hol")
    s1 = (c["Z+"] + c["Z-"]).scale(en.HALF)
    s2 = (c["Z'+"] + c["Z'-"]).scale(en.HALF)
    s3 = c["J"]
    _expect(report, "[S1, S2] = S3", s1.bracket(s2), s3)
    _expect(report, "[S3, S1] = S2", s3.bracket(s1), s2)
    _expect(report, "[S3, S2] = -S1", s3.bracket(s2), -s1)
    for name, field in (("S1", s1), ("S2", s2), ("S3", s3)):
        _expect_tangent(report, name, field)
    return report


def ad_orbit(k):
    """u_j = ad(Z+)^j W for j = 0, ..., 2k+1."""
    c = catalogue(k)
    orbit = [c["W"]]
    for _ in range(2 * k + 1):
        orbit.append(c["Z+"].bracket(orbit[-1]))
    return orbit


def verify_irrep(k):
    c = catalogue(k)
    _guard(c)
    report = Report("irrep")
    orbit = ad_orbit(k)
    H, zero = c["H"], _zero(k)
    for j, u in enumerate(orbit[:-1]):
        report.add(f"u{j} != 0", not u.is_zero())
        _expect(report, f"[H, u{j}] = {2 * (j - k)} u{j}", H.bracket(u), u.scale(2 * (j - k)))
    _expect(report, f"u{2 * k + 1} = 0", orbit[-1], zero)
    for i, j in itertools.combinations(range(len(orbit) - 1), 2):
        _expect(report, f"[u{i}, u{j}] = 0", orbit[i].bracket(orbit[j]), zero)
    _expect(report, "[Z-, W] = 0", c["Z-"].bracket(c["W"]), zero)
    _expect(report, "[Z'-, W] = 0", c["Z'-"].bracket(c["W"]), zero)
    _expect(report, f"[Z+, A'{k}] = 0", c["Z+"].bracket(c[f"A'{k}"]), zero)
    _expect(report, f"[Z'+, A'{k}] = 0", c["Z'+"].bracket(c[f"A'{k}"]), zero)
    report.data["dimension"] = len(orbit) - 1
    return report


def structure_images(k):
    """
    The fields assigned to the basis of the k-th family algebra:
    X+ -> Z+, X- -> -Z-, H -> H, v-k -> W, v(h+1) -> [Z+, image of vh] / (k - h).
    """
    c = catalogue(k)
    images = [-c["Z-"], c["H"], c["Z+"]]
    v = [c["W"]]
    for h in range(-k, k):
        v.append(c["Z+"].bracket(v[-1]).scale(_q(1, k - h)))
    return images + v


def _image(images, x, k):
    out = _zero(k)
    for c, field in zip(x, images):
        if c:
            out = out + field.scale(c)
    return out


def iso_certificate(k):
    """
    Check that the structure images preserve every bracket of the family algebra and
    that the structure basis lands in hol(M).
    """
    family = su2family.build_family(k)
    g = family.g
    images = structure_images(k)
    _guard({label: f for label, f in zip(g.basis_labels, images)})
    report = Report("iso")
    pairs = 0
    for i, j in itertools.combinations(range(g.dim), 2):
        lhs = _image(images, g.structure_constants(i, j), k)
        rhs = images[i].bracket(images[j])
        _expect(report, f"phi[{g.basis_labels[i]}, {g.basis_labels[j]}] = [phi {g.basis_labels[i]}, "
                        f"phi {g.basis_labels[j]}]", lhs, rhs)
        pairs += 1
    report.data["pairs_checked"] = pairs
    for label, field in zip(g.basis_labels, images):
        _expect_tangent(report, f"phi({label})", field)
    i_h = _image(images, g.element({"H": en.I}), k)
    report.add("phi(iH) vanishes at the origin", i_h.vanishes_at_origin())
    for x in liecore.real_form_basis(family.tau):
        _expect_tangent(report, f"phi({g.describe(x)})", _image(images, x, k), gated=False)
    report.data["images"] = {label: f.describe() for label, f in zip(g.basis_labels, images)}
    return report


SUITES = {
    "abelian": verify_abelian,
    "cpx": verify_cpx,
    "ascdes": verify_ascdes,
    "sl2": verify_sl2,
    "su2": verify_su2,
    "irrep": verify_irrep,
    "iso": iso_certificate,
    "su2hol": verify_su2_hol,
}

DEFAULT_SUITES = ("abelian", "cpx", "ascdes", "sl2", "su2", "irrep", "iso")


def run_suites(k, names=DEFAULT_SUITES):
    """
    :raises KeyError: for an unknown suite name
    """
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise KeyError("Unknown suite(s): " + ", ".join(unknown))
    return [SUITES[name](k) for name in names]
