"""Binary forms, classical transvectants, and the projective matrix action.

A `BinaryForm` of degree d stores d+1 coefficients; slot k holds the
coefficient of z1^(d-k) z2^k.  Coefficients may be exact scalars or
`MPoly` values, so the same code runs both concrete and symbolic checks.

The bilinear bracket implemented here is the classical transvectant

    psi_i(f, g) = (m-i)! (n-i)! / (m! n!) *
        sum_k (-1)^k C(i,k) d^i f/dz1^(i-k) dz2^k * d^i g/dz1^k dz2^(i-k)

for f of degree m and g of degree n.  The reference tables this package
verifies were produced with a possibly different transvectant scaling and
an unstated matrix-action convention; `calibrate_conventions` recovers
both mechanically and caches the result.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence, Union

from .mpoly import MPoly
from .scalar import CycScalar, Scalar, as_cyc, embed_complex, scalar_inverse, scalar_is_zero

FormCoeff = Union[Fraction, CycScalar, MPoly]


def _norm(c) -> FormCoeff:
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, (Fraction, CycScalar, MPoly)):
        return c
    raise TypeError(f"bad form coefficient: {c!r}")


def _is_zero_coeff(c: FormCoeff) -> bool:
    if isinstance(c, MPoly):
        return c.is_zero()
    return scalar_is_zero(c)


class BinaryForm:
    """Homogeneous binary form of a fixed degree; the zero form is degree-tagged."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Sequence) -> None:
        if degree < 0:
            raise ValueError("degree must be >= 0")
        if len(coeffs) != degree + 1:
            raise ValueError(f"degree {degree} needs {degree + 1} coefficients")
        self.degree = degree
        self.coeffs = tuple(_norm(c) for c in coeffs)

    @classmethod
    def zero(cls, degree: int) -> BinaryForm:
        return cls(degree, [Fraction(0)] * (degree + 1))

    @classmethod
    def monomial(cls, degree: int, z2_power: int, coeff=1) -> BinaryForm:
        cs: list = [Fraction(0)] * (degree + 1)
        cs[z2_power] = _norm(coeff)
        return cls(degree, cs)

    def is_zero(self) -> bool:
        return all(_is_zero_coeff(c) for c in self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: BinaryForm) -> BinaryForm:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            if self.is_zero() and not other.is_zero():
                return other
            if other.is_zero():
                return self
            raise ValueError("degree mismatch in form addition")
        return BinaryForm(self.degree,
                          [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: BinaryForm) -> BinaryForm:
        return self.__add__(-other)

    def __neg__(self) -> BinaryForm:
        return BinaryForm(self.degree, [-c for c in self.coeffs])

    def scale(self, scalar) -> BinaryForm:
        s = scalar if isinstance(scalar, MPoly) else _norm(scalar)
        return BinaryForm(self.degree, [s * c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            d = self.degree + other.degree
            acc: list = [Fraction(0)] * (d + 1)
            for i, a in enumerate(self.coeffs):
                if _is_zero_coeff(a):
                    continue
                for j, b in enumerate(other.coeffs):
                    if _is_zero_coeff(b):
                        continue
                    acc[i + j] = acc[i + j] + a * b
            return BinaryForm(d, acc)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    # -- calculus ---------------------------------------------------------

    def diff_z1(self) -> BinaryForm:
        d = self.degree
        if d == 0:
            return BinaryForm.zero(0)
        return BinaryForm(d - 1, [(d - k) * self.coeffs[k] for k in range(d)])

    def diff_z2(self) -> BinaryForm:
        d = self.degree
        if d == 0:
            return BinaryForm.zero(0)
        return BinaryForm(d - 1, [(k + 1) * self.coeffs[k + 1] for k in range(d)])

    def diff(self, n1: int, n2: int) -> BinaryForm:
        out = self
        for _ in range(n1):
            out = out.diff_z1()
        for _ in range(n2):
            out = out.diff_z2()
        return out

    def evaluate(self, z1, z2):
        total = None
        d = self.degree
        for k, c in enumerate(self.coeffs):
            if _is_zero_coeff(c):
                continue
            term = c
            for _ in range(d - k):
                term = term * z1
            for _ in range(k):
                term = term * z2
            total = term if total is None else total + term
        if total is None:
            return Fraction(0)
        return total

    def embed(self) -> list[complex]:
        """Complex coefficient list (requires scalar coefficients)."""
        out = []
        for c in self.coeffs:
            if isinstance(c, MPoly):
                raise TypeError("cannot embed a symbolic form")
            out.append(embed_complex(c))
        return out

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        d = self.degree
        chunks = []
        for k, c in enumerate(self.coeffs):
            if _is_zero_coeff(c):
                continue
            mono = []
            if d - k:
                mono.append(f"z1^{d - k}" if d - k > 1 else "z1")
            if k:
                mono.append(f"z2^{k}" if k > 1 else "z2")
            mstr = "*".join(mono) or "1"
            chunks.append(f"({c})*{mstr}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"BinaryForm(deg={self.degree}, {self})"


def transvectant(f: BinaryForm, g: BinaryForm, i: int) -> BinaryForm:
    """Classical i-th transvectant of f and g (see module docstring)."""
    m, n = f.degree, g.degree
    if i < 0 or i > min(m, n):
        raise ValueError(f"transvectant index {i} out of range for degrees {m},{n}")
    pref = Fraction(factorial(m - i) * factorial(n - i),
                    factorial(m) * factorial(n))
    total = BinaryForm.zero(m + n - 2 * i)
    for k in range(i + 1):
        piece = f.diff(i - k, k) * g.diff(k, i - k)
        sign = -1 if k % 2 else 1
        total = total + piece.scale(Fraction(sign * comb(i, k)))
    return total.scale(pref)


# ---------------------------------------------------------------------------
# Projective 2x2 matrices over Q(zeta_8)


class GroupElt:
    """2x2 matrix over Q(zeta_8) with nonzero determinant, taken modulo scalars."""

    __slots__ = ("m",)

    def __init__(self, a, b, c, d) -> None:
        self.m = (as_cyc(a), as_cyc(b), as_cyc(c), as_cyc(d))
        if self.det().is_zero():
            raise ValueError("singular matrix")

    @classmethod
    def identity(cls) -> GroupElt:
        return cls(1, 0, 0, 1)

    def det(self) -> CycScalar:
        a, b, c, d = self.m
        return a * d - b * c

    def __mul__(self, other: GroupElt) -> GroupElt:
        if not isinstance(other, GroupElt):
            return NotImplemented
        a, b, c, d = self.m
        e, f, g, h = other.m
        return GroupElt(a * e + b * g, a * f + b * h,
                        c * e + d * g, c * f + d * h)

    def inverse(self) -> GroupElt:
        a, b, c, d = self.m
        # Adjugate works projectively; the determinant factor is a scalar.
        return GroupElt(d, -b, -c, a)

    def transpose(self) -> GroupElt:
        a, b, c, d = self.m
        return GroupElt(a, c, b, d)

    def canonical(self) -> tuple[CycScalar, CycScalar, CycScalar, CycScalar]:
        """Representative scaled so the first nonzero entry equals 1."""
        lead = next(e for e in self.m if not e.is_zero())
        inv = lead.inverse()
        return tuple(inv * e for e in self.m)  # type: ignore[return-value]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElt):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def order(self, cap: int = 64) -> int:
        """Order modulo scalars."""
        ident = GroupElt.identity()
        acc = self
        for n in range(1, cap + 1):
            if acc == ident:
                return n
            acc = acc * self
        raise RuntimeError("order exceeds cap")

    def __repr__(self) -> str:
        a, b, c, d = self.m
        return f"GroupElt([{a}, {b}; {c}, {d}])"


def mul_closure(generators: Sequence[GroupElt], cap: int = 512) -> list[GroupElt]:
    """All products of the generators modulo scalars (breadth-first)."""
    seen: dict[tuple, GroupElt] = {}
    frontier = [GroupElt.identity(), *generators]
    for g in frontier:
        seen.setdefault(g.canonical(), g)
    frontier = list(seen.values())
    while frontier:
        new: list[GroupElt] = []
        for g in frontier:
            for h in generators:
                prod = g * h
                key = prod.canonical()
                if key not in seen:
                    seen[key] = prod
                    new.append(prod)
        frontier = new
        if len(seen) > cap:
            raise RuntimeError("group closure exceeded cap")
    return list(seen.values())


# ---------------------------------------------------------------------------
# Matrix action on forms

ACTION_CONVENTIONS = ("substitute_inverse", "substitute_direct", "substitute_transpose")


def _compose(f: BinaryForm, g: GroupElt) -> BinaryForm:
    """f(a z1 + b z2, c z1 + d z2) for g = [[a, b], [c, d]]."""
    a, b, c, d = g.m
    d_deg = f.degree
    row1 = BinaryForm(1, [a, b])
    row2 = BinaryForm(1, [c, d])
    pow1: list[BinaryForm] = [BinaryForm(0, [Fraction(1)])]
    pow2: list[BinaryForm] = [BinaryForm(0, [Fraction(1)])]
    for _ in range(d_deg):
        pow1.append(pow1[-1] * row1)
        pow2.append(pow2[-1] * row2)
    total = BinaryForm.zero(d_deg)
    for k, coeff in enumerate(f.coeffs):
        if _is_zero_coeff(coeff):
            continue
        total = total + (pow1[d_deg - k] * pow2[k]).scale(coeff)
    return total


def group_act(g: GroupElt, f: BinaryForm, convention: str | None = None) -> BinaryForm:
    """Action of a projective matrix on a form.

    The substitution matrix depends on the convention; the result is
    normalised by det^(degree/2) so it only depends on g modulo scalars.
    """
    if convention is None:
        convention = calibrate_conventions().convention
    if convention == "substitute_inverse":
        sub = g.inverse()
    elif convention == "substitute_direct":
        sub = g
    elif convention == "substitute_transpose":
        sub = g.transpose()
    else:
        raise ValueError(f"unknown action convention {convention!r}")
    out = _compose(f, sub)
    if f.degree % 2:
        if sub.det() != CycScalar.one():
            raise ValueError("odd-degree action needs a determinant-1 representative")
        return out
    norm = scalar_inverse(sub.det() ** (f.degree // 2))
    return out.scale(norm)


# ---------------------------------------------------------------------------
# The quadratic map assembled from transvectants


@dataclass(frozen=True)
class Lambda:
    """Weights (l0, l2, l4, l6) of the four bilinear pieces of the map."""

    l0: object
    l2: object
    l4: object
    l6: object

    @classmethod
    def standard(cls, eps) -> Lambda:
        """The normalised weight vector (1, 6*eps, 1, 6)."""
        return cls(Fraction(1), 6 * eps, Fraction(1), Fraction(6))

    def as_tuple(self):
        return (self.l0, self.l2, self.l4, self.l6)


def delta_forms(lam: Lambda, f8: BinaryForm, f0, f4: BinaryForm,
                scalars: tuple[Fraction, Fraction, Fraction] | None = None) -> BinaryForm:
    """The degree-4 image of (f8, f0, f4); f0 is a plain scalar.

    `scalars` are the calibrated transvectant rescalings (s2, s4, s6);
    by default the cached calibration result is used.
    """
    if scalars is None:
        scalars = calibrate_conventions().scalars
    s2, s4, s6 = scalars
    out = transvectant(f8, f8, 6).scale(s6).scale(lam.l6)
    out = out + transvectant(f8, f4, 4).scale(s4).scale(lam.l4)
    out = out + transvectant(f4, f4, 2).scale(s2).scale(lam.l2)
    out = out + f4.scale(f0).scale(lam.l0)
    return out


def delta(lam: Lambda, v: Sequence,
          scalars: tuple[Fraction, Fraction, Fraction] | None = None) -> BinaryForm:
    """The quadratic map on a 15-component coordinate vector."""
    from . import construction

    f8, f0, f4 = construction.assemble(v)
    return delta_forms(lam, f8, f0, f4, scalars)


@dataclass(frozen=True)
class Calibration:
    """Mechanically recovered conventions: action style and bracket scalings."""

    convention: str
    scalars: tuple[Fraction, Fraction, Fraction]  # (s2, s4, s6)
    matched_conventions: tuple[str, ...]
    expansion_residuals: tuple[str, ...]
    table_mismatch_counts: dict
    # How the stored coordinate tables list the two same-argument bracket
    # expansions: each unordered pair of basis indices appears once, so an
    # off-diagonal table entry is the bilinear value on (e_i, e_j) rather
    # than the doubled coefficient of the associated quadratic form.
    expansion_listing: str = "unordered-pairs"


@lru_cache(maxsize=1)
def bracket_tables() -> tuple[dict, dict, dict]:
    """Slot coordinates of every basis-pair bracket, as three pair maps.

    Returns (p6, p4, p2): p6[(i, j)] (i <= j, octic indices) and
    p2[(i, j)] (i <= j, quartic indices) hold the quartic-coordinate
    5-tuples of the degree-6 and degree-2 brackets on basis pairs;
    p4[(i, j)] covers all octic-by-quartic pairs of the mixed bracket.
    Everything downstream of the stored expansion assembles from these.
    """
    from . import construction

    octics = construction.octic_basis()
    quartics = construction.quartic_basis()
    p6 = {}
    for i in range(9):
        for j in range(i, 9):
            p6[(i, j)] = tuple(construction.quartic_coordinates(
                transvectant(octics[i], octics[j], 6)))
    p2 = {}
    for i in range(5):
        for j in range(i, 5):
            p2[(i, j)] = tuple(construction.quartic_coordinates(
                transvectant(quartics[i], quartics[j], 2)))
    p4 = {}
    for i in range(9):
        for j in range(5):
            p4[(i, j)] = tuple(construction.quartic_coordinates(
                transvectant(octics[i], quartics[j], 4)))
    return p6, p4, p2


def expanded_coordinate_system(scalars=None) -> tuple[MPoly, ...]:
    """The quadratic map's five coordinate polynomials, crosses doubled.

    Unlike the stored tables (which list each unordered basis pair once),
    these are the literal polynomial coordinates of the quadratic map: a
    mixed product of two distinct same-degree basis vectors picks up both
    orderings.  This is the version that is equivariant under the full
    generator set and whose zero set contains the multiple-root locus.
    """
    from . import construction

    if scalars is None:
        scalars = calibrate_conventions().scalars
    s2, s4, s6 = scalars
    table = construction.DEFAULT_TABLE
    xs = [MPoly.var(f"x{i}", table) for i in range(1, 10)]
    ss = [MPoly.var(f"s{i}", table) for i in range(6)]
    eps = MPoly.var("eps", table)
    p6, p4, p2 = bracket_tables()

    out = [MPoly.const(Fraction(0), table) for _ in range(5)]
    for (i, j), vals in p6.items():
        mono = xs[i] * xs[j]
        w = (6 * s6) if i == j else (12 * s6)
        out = [acc + (w * c) * mono for acc, c in zip(out, vals)]
    for (i, j), vals in p4.items():
        mono = xs[i] * ss[j + 1]
        out = [acc + (s4 * c) * mono for acc, c in zip(out, vals)]
    for (i, j), vals in p2.items():
        mono = eps * ss[i + 1] * ss[j + 1]
        w = (6 * s2) if i == j else (12 * s2)
        out = [acc + (w * c) * mono for acc, c in zip(out, vals)]
    for k in range(5):
        out[k] = out[k] + ss[0] * ss[k + 1]
    return tuple(out)


@lru_cache(maxsize=1)
def calibrate_conventions() -> Calibration:
    """Recover the transvectant scalings and the matrix-action convention.

    The stored coordinate tables expand the two same-argument brackets
    over unordered pairs of basis indices: the entry printed on a mixed
    product x_i*x_j (i < j) is the bilinear value on (e_i, e_j), listed
    once, while a diagonal entry x_i^2 carries the value on (e_i, e_i).
    The comparison series here is assembled the same way, pairwise over
    the basis, rather than by expanding the bracket of a fully symbolic
    argument (which would double every mixed product).

    The scalings are pinned by three probe coefficients of the stored
    expansion (each appears linearly, so each is unique); the whole
    expansion is then recomputed and compared coefficient by
    coefficient.  The action convention is the unique candidate whose
    induced 15x15 generator matrices reproduce the stored action table.
    """
    from . import construction

    table = construction.DEFAULT_TABLE
    xs = [MPoly.var(f"x{i}", table) for i in range(1, 10)]
    ss = [MPoly.var(f"s{i}", table) for i in range(6)]
    eps = MPoly.var("eps", table)
    f0 = ss[0]
    p6, p4, p2 = bracket_tables()

    zero5 = [MPoly.const(Fraction(0), table) for _ in range(5)]
    t6 = list(zero5)
    for (i, j), vals in p6.items():
        mono = xs[i] * xs[j]
        t6 = [acc + c * mono for acc, c in zip(t6, vals)]
    t2 = list(zero5)
    for (i, j), vals in p2.items():
        mono = ss[i + 1] * ss[j + 1]
        t2 = [acc + c * mono for acc, c in zip(t2, vals)]
    # The mixed bracket has arguments of different degrees, so every
    # basis pair is distinct and the plain double sum already lists each
    # product once.
    t4 = list(zero5)
    for (i, j), vals in p4.items():
        mono = xs[i] * ss[j + 1]
        t4 = [acc + c * mono for acc, c in zip(t4, vals)]

    # Probe coefficients: x7*x8 in slot 1 must land on 6, x7*s1 in slot 1
    # on 1, and eps*s1^2 in slot 2 on 2 (weights 6, 1 and 6*eps).
    c6 = t6[0].coeff({"x7": 1, "x8": 1})
    c4 = t4[0].coeff({"x7": 1, "s1": 1})
    c2 = t2[1].coeff({"s1": 2})
    if c6 == 0 or c4 == 0 or c2 == 0:
        raise RuntimeError("degenerate probe coefficient during calibration")
    s6 = Fraction(6) / (6 * c6)
    s4 = Fraction(1) / c4
    s2 = Fraction(2) / (6 * c2)

    stored = construction.delta_coordinate_system()
    residuals: list[str] = []
    for slot in range(5):
        computed = (6 * s6) * t6[slot] + s4 * t4[slot] \
            + (6 * s2) * (eps * t2[slot]) + f0 * ss[slot + 1]
        diff = computed - stored[slot]
        for mono, c in diff.sorted_terms():
            names = table.names
            mstr = "*".join(f"{names[k]}^{e}" if e > 1 else names[k]
                            for k, e in enumerate(mono) if e)
            residuals.append(f"slot {slot + 1}: {mstr}: off by {c}")

    # Action convention: compare induced generator matrices to the table.
    mismatch_counts: dict[str, int] = {}
    matched: list[str] = []
    for cand in ACTION_CONVENTIONS:
        bad = 0
        for name, g in construction.generators().items():
            induced = construction.induced_vec15_matrix(g, convention=cand)
            stored_mat = construction.action_table()[name]
            for row_i, row_s in zip(induced, stored_mat):
                for a, b in zip(row_i, row_s):
                    if as_cyc(a) != as_cyc(b):
                        bad += 1
        mismatch_counts[cand] = bad
        if bad == 0:
            matched.append(cand)

    return Calibration(
        convention=matched[0] if len(matched) == 1 else "",
        scalars=(s2, s4, s6),
        matched_conventions=tuple(matched),
        expansion_residuals=tuple(residuals),
        table_mismatch_counts=mismatch_counts,
    )


# ---------------------------------------------------------------------------
# Exact root structure of forms with scalar coefficients


def _univar_coeffs(f: BinaryForm) -> list:
    """Coefficients of f(1, w) as a dense list, constant term first."""
    return list(f.coeffs)


def _poly_degree(coeffs: list) -> int:
    d = -1
    for k, c in enumerate(coeffs):
        if not _is_zero_coeff(c):
            d = k
    return d


def _poly_mod(num: list, den: list) -> list:
    """Remainder of dense univariate division over an exact field."""
    num = list(num)
    dd = _poly_degree(den)
    if dd < 0:
        raise ZeroDivisionError("polynomial division by zero")
    lead_inv = scalar_inverse(den[dd])
    while True:
        nd = _poly_degree(num)
        if nd < dd:
            break
        factor = num[nd] * lead_inv
        shift = nd - dd
        for k in range(dd + 1):
            num[k + shift] = num[k + shift] - factor * den[k]
        num[nd] = Fraction(0)  # clear any residue exactly
    return num


def _poly_gcd_degree(p: list, q: list) -> int:
    """Degree of gcd(p, q) over the coefficient field."""
    a, b = list(p), list(q)
    while _poly_degree(b) >= 0:
        a, b = b, _poly_mod(a, b)
    return _poly_degree(a)


def _poly_diff(p: list) -> list:
    return [k * p[k] for k in range(1, len(p))] or [Fraction(0)]


def root_multiplicity(f: BinaryForm, point: tuple) -> int:
    """Multiplicity of the projective root (a : b) in an exact form.

    For the coordinate points (1:0) and (0:1) this is a coefficient-count
    and works for symbolic coefficients too; elsewhere the form must have
    field coefficients.
    """
    a, b = point
    if _is_zero_coeff(b if isinstance(b, MPoly) else _norm(b)):
        # (1:0): count vanishing low z2-powers.
        m = 0
        for c in f.coeffs:
            if _is_zero_coeff(c):
                m += 1
            else:
                break
        return m
    if _is_zero_coeff(a if isinstance(a, MPoly) else _norm(a)):
        # (0:1): count vanishing high z2-powers.
        m = 0
        for c in reversed(f.coeffs):
            if _is_zero_coeff(c):
                m += 1
            else:
                break
        return m
    # General point: repeated exact division by (b*z1 - a*z2).
    mult = 0
    coeffs = list(f.coeffs)
    a, b = _norm(a), _norm(b)
    binv = scalar_inverse(b)
    while True:
        d = len(coeffs) - 1
        # Value f(a, b).
        val = Fraction(0)
        for k, c in enumerate(coeffs):
            term = c
            for _ in range(d - k):
                term = term * a
            for _ in range(k):
                term = term * b
            val = val + term
        if not _is_zero_coeff(val):
            return mult
        mult += 1
        if d == 0:
            return mult
        # Synthetic division: f = (b z1 - a z2) * g with deg g = d - 1.
        g: list = [Fraction(0)] * d
        g[0] = coeffs[0] * binv
        for k in range(1, d):
            g[k] = (coeffs[k] + a * g[k - 1]) * binv
        coeffs = g


def _max_mult_univar(p: list) -> int:
    """Largest root multiplicity of a nonzero dense univariate polynomial.

    Roots of gcd(p, p') are exactly the repeated roots of p, each with
    multiplicity dropped by one, so recursing on the gcd counts the depth.
    """
    if _poly_degree(p) <= 0:
        return 0
    g = _gcd_poly(p, _poly_diff(p))
    if _poly_degree(g) <= 0:
        return 1
    return 1 + _max_mult_univar(g)


def max_root_multiplicity_exact(f: BinaryForm) -> int:
    """Largest projective root multiplicity of a form with field coefficients."""
    if f.is_zero():
        raise ValueError("zero form has no root multiplicities")
    at_infinity = root_multiplicity(f, (Fraction(0), Fraction(1)))
    return max(at_infinity, _max_mult_univar(_univar_coeffs(f)))


def _gcd_poly(p: list, q: list) -> list:
    a, b = list(p), list(q)
    while _poly_degree(b) >= 0:
        a, b = b, _poly_mod(a, b)
    d = _poly_degree(a)
    if d < 0:
        return [Fraction(1)]
    lead_inv = scalar_inverse(a[d])
    return [c * lead_inv for c in a[:d + 1]]


def has_distinct_roots(f: BinaryForm) -> bool:
    """True iff the exact form is squarefree, i.e. all projective roots simple."""
    if f.is_zero():
        return False
    if root_multiplicity(f, (Fraction(0), Fraction(1))) > 1:
        return False
    p = _univar_coeffs(f)
    return _poly_gcd_degree(p, _poly_diff(p)) <= 0
