"""Single source of truth for the verified construction's constant data.

Everything the checks compare against lives here: the 15 basis forms of
the octic/constant/quartic space, the stored coordinate expansion of the
quadratic map, the restricted equation systems, the finite symmetry
group's generators and its stored 15x15 coordinate action, the induced
actions on the parameter space and on the projective chart image, the
chart map itself, distinguished points, stratum data, and the two linear
subspaces used by the projection argument.

Transcriptions follow the reference tables verbatim except where the
erratum ledger (errata.json) records a corrected reading; each correction
is validated by the check suite.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .binform import BinaryForm, GroupElt, group_act
from .exlinalg import ExactMatrix
from .mpoly import MPoly, VarTable, default_table
from .scalar import CycScalar, Scalar, as_cyc, embed_complex, scalar_inverse, scalar_is_zero

DEFAULT_TABLE = default_table()

X_NAMES = tuple(f"x{i}" for i in range(1, 10))
S_NAMES = tuple(f"s{i}" for i in range(6))
VEC15_NAMES = X_NAMES + S_NAMES
Y_NAMES = ("y1", "y2", "y3", "y7", "y8", "y9", "y10", "y11", "y12")
R_NAMES = ("r1", "r2", "r3")

_F = Fraction
_I = CycScalar.i()


def _poly(terms, table: VarTable = DEFAULT_TABLE) -> MPoly:
    """Build an MPoly from (coefficient, {var: exponent}) pairs."""
    acc = MPoly.zero(table)
    for coeff, monomial in terms:
        t = MPoly.const(coeff, table)
        for name, e in monomial.items():
            t = t * MPoly.var(name, table) ** e
        acc = acc + t
    return acc


# ---------------------------------------------------------------------------
# Projective points


class ProjPoint:
    """Point of a projective space over an exact scalar field."""

    __slots__ = ("coords", "space")

    def __init__(self, coords: Sequence, space: str | None = None) -> None:
        cs = []
        for c in coords:
            cs.append(_F(c) if isinstance(c, int) else c)
        if all(scalar_is_zero(c) for c in cs):
            raise ValueError("all homogeneous coordinates vanish")
        self.coords = tuple(cs)
        self.space = space or f"P{len(cs) - 1}"

    def canonical(self) -> tuple:
        """Scale so the first nonzero coordinate is 1."""
        lead = next(c for c in self.coords if not scalar_is_zero(c))
        inv = scalar_inverse(lead)
        return tuple(inv * c for c in self.coords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        if len(self.coords) != len(other.coords):
            return False
        return all(as_cyc(a) == as_cyc(b)
                   for a, b in zip(self.canonical(), other.canonical()))

    def __hash__(self) -> int:
        return hash(tuple(as_cyc(c) for c in self.canonical()))

    def embed(self) -> list[complex]:
        return [embed_complex(c) for c in self.coords]

    def __repr__(self) -> str:
        return "(" + " : ".join(str(c) for c in self.coords) + ")"


# ---------------------------------------------------------------------------
# The fixed basis of the 15-dimensional representation space

_OCTIC_BASIS_COEFFS = (
    # index k holds the z1^(8-k) z2^k coefficient
    (0, 0, 28, 0, 0, 0, -28, 0, 0),
    (0, 56, 0, 56, 0, -56, 0, -56, 0),
    (0, 56, 0, -56, 0, -56, 0, 56, 0),
    (1, 0, 0, 0, 0, 0, 0, 0, -1),
    (0, 8, 0, -56, 0, 56, 0, -8, 0),  # leading monomial degree corrected (errata)
    (0, 8, 0, 56, 0, 56, 0, 8, 0),
    (1, 0, 0, 0, 0, 0, 0, 0, 1),
    (0, 0, 28, 0, 0, 0, 28, 0, 0),
    (0, 0, 0, 0, 70, 0, 0, 0, 0),
)

_QUARTIC_BASIS_COEFFS = (
    (1, 0, 0, 0, 1),
    (0, 0, 6, 0, 0),
    (1, 0, 0, 0, -1),
    (0, 4, 0, -4, 0),
    (0, 4, 0, 4, 0),
)


@lru_cache(maxsize=1)
def octic_basis() -> tuple[BinaryForm, ...]:
    return tuple(BinaryForm(8, cs) for cs in _OCTIC_BASIS_COEFFS)


@lru_cache(maxsize=1)
def quartic_basis() -> tuple[BinaryForm, ...]:
    return tuple(BinaryForm(4, cs) for cs in _QUARTIC_BASIS_COEFFS)


def assemble(coords15: Sequence) -> tuple[BinaryForm, object, BinaryForm]:
    """Coordinate vector -> (degree-8 form, constant, degree-4 form)."""
    if len(coords15) != 15:
        raise ValueError("expected 15 coordinates")
    f8 = BinaryForm.zero(8)
    for c, e in zip(coords15[:9], octic_basis()):
        f8 = f8 + e.scale(c)
    f0 = coords15[9]
    f4 = BinaryForm.zero(4)
    for c, a in zip(coords15[10:], quartic_basis()):
        f4 = f4 + a.scale(c)
    return f8, f0, f4


@lru_cache(maxsize=1)
def _octic_basis_matrix_inverse() -> ExactMatrix:
    cols = [list(cs) for cs in _OCTIC_BASIS_COEFFS]
    return ExactMatrix.from_columns(cols).inverse()


def octic_coordinates(f: BinaryForm) -> list:
    """Coordinates of a degree-8 form with scalar coefficients in the basis."""
    if f.degree != 8:
        raise ValueError("degree-8 form expected")
    return _octic_basis_matrix_inverse().apply(list(f.coeffs))


def quartic_coordinates(f: BinaryForm) -> list:
    """Coordinates of a degree-4 form in the quartic basis.

    Closed-form inversion, so it works for symbolic (MPoly) coefficients.
    """
    if f.degree != 4:
        raise ValueError("degree-4 form expected")
    c0, c1, c2, c3, c4 = f.coeffs
    half, sixth, eighth = _F(1, 2), _F(1, 6), _F(1, 8)
    return [
        half * (c0 + c4),
        sixth * c2,
        half * (c0 - c4),
        eighth * (c1 - c3),
        eighth * (c1 + c3),
    ]


def vec15_coordinates(f8: BinaryForm, f0, f4: BinaryForm) -> list:
    return octic_coordinates(f8) + [f0] + quartic_coordinates(f4)


def basis_vectors():
    """All 15 basis forms plus the coordinate round-trip map."""
    forms = octic_basis() + (_F(1),) + quartic_basis()

    def coords(f8: BinaryForm, f0, f4: BinaryForm) -> list:
        return vec15_coordinates(f8, f0, f4)

    return forms, coords


def unit15(index: int) -> list:
    v: list = [_F(0)] * 15
    v[index] = _F(1)
    return v


# ---------------------------------------------------------------------------
# Stored coordinate expansion of the quadratic map


@lru_cache(maxsize=1)
def pure_quadric_parts() -> tuple[MPoly, ...]:
    """The five stored quadrics in the degree-8 coordinates alone."""
    q1 = _poly([
        (6, {"x7": 1, "x8": 1}), (90, {"x8": 1, "x9": 1}), (-6, {"x4": 1, "x1": 1}),
        (-192, {"x5": 2}), (-96, {"x5": 1, "x2": 1}), (-192, {"x6": 2}),
        (-96, {"x6": 1, "x3": 1}), (384, {"x2": 2}), (384, {"x3": 2}),
    ])
    q2 = _poly([
        (2, {"x7": 2}), (-16, {"x8": 2}), (-50, {"x9": 2}), (-2, {"x4": 2}),
        (-64, {"x5": 2}), (96, {"x5": 1, "x2": 1}), (64, {"x6": 2}),
        (-96, {"x6": 1, "x3": 1}), (16, {"x1": 2}), (128, {"x2": 2}), (-128, {"x3": 2}),
    ])
    q3 = _poly([
        (-6, {"x7": 1, "x1": 1}), (6, {"x8": 1, "x4": 1}), (90, {"x9": 1, "x1": 1}),
        (48, {"x5": 1, "x6": 1}), (-336, {"x5": 1, "x3": 1}),
        (-336, {"x6": 1, "x2": 1}), (624, {"x2": 1, "x3": 1}),
    ])
    q4 = _poly([
        (-3, {"x7": 1, "x5": 1}), (-21, {"x7": 1, "x2": 1}), (12, {"x8": 1, "x5": 1}),
        (-132, {"x8": 1, "x2": 1}), (15, {"x9": 1, "x5": 1}), (-15, {"x9": 1, "x2": 1}),
        (3, {"x4": 1, "x6": 1}), (21, {"x4": 1, "x3": 1}), (42, {"x6": 1, "x1": 1}),
        (78, {"x1": 1, "x3": 1}),
    ])
    q5 = _poly([
        (3, {"x7": 1, "x6": 1}), (21, {"x7": 1, "x3": 1}), (12, {"x8": 1, "x6": 1}),
        (-132, {"x8": 1, "x3": 1}), (-15, {"x9": 1, "x6": 1}), (15, {"x9": 1, "x3": 1}),
        (-3, {"x4": 1, "x5": 1}), (-21, {"x4": 1, "x2": 1}), (42, {"x5": 1, "x1": 1}),
        (78, {"x1": 1, "x2": 1}),
    ])
    return q1, q2, q3, q4, q5


@lru_cache(maxsize=1)
def delta_coordinate_system() -> tuple[MPoly, ...]:
    """The five stored quartic-coordinate components of the quadratic map."""
    q1, q2, q3, q4, q5 = pure_quadric_parts()
    Q1 = q1 + _poly([
        (1, {"x7": 1, "s1": 1}), (1, {"x9": 1, "s1": 1}), (6, {"x8": 1, "s2": 1}),
        (-1, {"x4": 1, "s3": 1}), (8, {"x5": 1, "s4": 1}), (24, {"x2": 1, "s4": 1}),
        (-8, {"x6": 1, "s5": 1}), (-24, {"x3": 1, "s5": 1}),
        (6, {"eps": 1, "s1": 1, "s2": 1}), (-12, {"eps": 1, "s4": 2}),
        (-12, {"eps": 1, "s5": 2}), (1, {"s0": 1, "s1": 1}),
    ])
    # The x2*s4 coupling below is +8, not -8 (errata; forced by the
    # slot's invariance under the diagonal generator, which swaps the
    # x2*s4 and x3*s5 couplings, and confirmed by the pairwise bracket
    # expansion of the octic/quartic cross terms).
    Q2 = q2 + _poly([
        (2, {"x8": 1, "s1": 1}), (6, {"x9": 1, "s2": 1}), (-2, {"x1": 1, "s3": 1}),
        (-8, {"x5": 1, "s4": 1}), (8, {"x2": 1, "s4": 1}), (-8, {"x6": 1, "s5": 1}),
        (8, {"x3": 1, "s5": 1}),
        (2, {"eps": 1, "s1": 2}), (-6, {"eps": 1, "s2": 2}), (-2, {"eps": 1, "s3": 2}),
        (-4, {"eps": 1, "s4": 2}), (4, {"eps": 1, "s5": 2}), (1, {"s0": 1, "s2": 1}),
    ])
    Q3 = q3 + _poly([
        (1, {"x4": 1, "s1": 1}), (6, {"x1": 1, "s2": 1}), (-1, {"x7": 1, "s3": 1}),
        (1, {"x9": 1, "s3": 1}), (32, {"x3": 1, "s4": 1}), (-32, {"x2": 1, "s5": 1}),
        (6, {"eps": 1, "s2": 1, "s3": 1}), (-12, {"eps": 1, "s4": 1, "s5": 1}),
        (1, {"s0": 1, "s3": 1}),
    ])
    Q4 = q4 + _poly([
        (2, {"x5": 1, "s1": 1}), (6, {"x2": 1, "s1": 1}), (-6, {"x5": 1, "s2": 1}),
        (6, {"x2": 1, "s2": 1}), (-8, {"x3": 1, "s3": 1}), (4, {"x8": 1, "s4": 1}),
        (-4, {"x9": 1, "s4": 1}), (-4, {"x1": 1, "s5": 1}),
        (-3, {"eps": 1, "s1": 1, "s4": 1}), (-3, {"eps": 1, "s2": 1, "s4": 1}),
        (3, {"eps": 1, "s3": 1, "s5": 1}), (1, {"s0": 1, "s4": 1}),
    ])
    # The s2-coupling below reads x6*s2, not x2*s2 (errata; forced by the
    # generator action and by the restricted system).
    Q5 = q5 + _poly([
        (2, {"x6": 1, "s1": 1}), (6, {"x3": 1, "s1": 1}), (6, {"x6": 1, "s2": 1}),
        (-6, {"x3": 1, "s2": 1}), (-8, {"x2": 1, "s3": 1}), (4, {"x1": 1, "s4": 1}),
        (-4, {"x8": 1, "s5": 1}), (-4, {"x9": 1, "s5": 1}),
        (3, {"eps": 1, "s1": 1, "s5": 1}), (-3, {"eps": 1, "s2": 1, "s5": 1}),
        (-3, {"eps": 1, "s3": 1, "s4": 1}), (1, {"s0": 1, "s5": 1}),
    ])
    return Q1, Q2, Q3, Q4, Q5


@lru_cache(maxsize=1)
def restricted_system_3_2() -> tuple[MPoly, ...]:
    """The five stored equations after setting s3 = s4 = s5 = 0."""
    q1, q2, q3, q4, q5 = pure_quadric_parts()
    r1 = q1 + _poly([
        (1, {"x7": 1, "s1": 1}), (1, {"x9": 1, "s1": 1}), (6, {"x8": 1, "s2": 1}),
        (6, {"eps": 1, "s1": 1, "s2": 1}), (1, {"s0": 1, "s1": 1}),
    ])
    r2 = q2 + _poly([
        (2, {"x8": 1, "s1": 1}), (6, {"x9": 1, "s2": 1}),
        (2, {"eps": 1, "s1": 2}), (-6, {"eps": 1, "s2": 2}), (1, {"s0": 1, "s2": 1}),
    ])
    r3 = q3 + _poly([(1, {"x4": 1, "s1": 1}), (6, {"x1": 1, "s2": 1})])
    r4 = q4 + _poly([
        (2, {"x5": 1, "s1": 1}), (6, {"x2": 1, "s1": 1}),
        (-6, {"x5": 1, "s2": 1}), (6, {"x2": 1, "s2": 1}),
    ])
    r5 = q5 + _poly([
        (2, {"x6": 1, "s1": 1}), (6, {"x3": 1, "s1": 1}),
        (6, {"x6": 1, "s2": 1}), (-6, {"x3": 1, "s2": 1}),
    ])
    return r1, r2, r3, r4, r5


@lru_cache(maxsize=1)
def y_equations_4_5() -> tuple[MPoly, ...]:
    """The stored chart-image equations: two quadrics and three linear forms."""
    E1 = _poly([
        (6, {"y7": 1, "y8": 1}), (90, {"y8": 1, "y9": 1}),
        (-192, {"r3": 2, "y1": 1, "y2": 1}), (-96, {"r3": 1, "y1": 1, "y2": 1}),
        (384, {"y1": 1, "y2": 1}),
        (-192, {"r2": 2, "y1": 1, "y3": 1}), (-96, {"r2": 1, "y1": 1, "y3": 1}),
        (384, {"y1": 1, "y3": 1}),
        (-6, {"r1": 1, "y2": 1, "y3": 1}),
        # first s-coupling term corrected to y7*y11 (errata)
        (1, {"y7": 1, "y11": 1}), (1, {"y9": 1, "y11": 1}), (6, {"y8": 1, "y12": 1}),
        (6, {"eps": 1, "y11": 1, "y12": 1}), (1, {"y10": 1, "y11": 1}),
    ])
    E2 = _poly([
        (2, {"y7": 2}), (-16, {"y8": 2}), (-50, {"y9": 2}),
        (64, {"r3": 2, "y1": 1, "y2": 1}), (-96, {"r3": 1, "y1": 1, "y2": 1}),
        (-128, {"y1": 1, "y2": 1}),
        (-64, {"r2": 2, "y1": 1, "y3": 1}), (96, {"r2": 1, "y1": 1, "y3": 1}),
        (128, {"y1": 1, "y3": 1}),
        (-2, {"r1": 2, "y2": 1, "y3": 1}), (16, {"y2": 1, "y3": 1}),
        (2, {"y8": 1, "y11": 1}), (6, {"y9": 1, "y12": 1}),
        (2, {"eps": 1, "y11": 2}), (-6, {"eps": 1, "y12": 2}),
        (1, {"y10": 1, "y12": 1}),
    ])
    E3 = _poly([
        (48, {"r2": 1, "r3": 1, "y1": 1}), (-336, {"r2": 1, "y1": 1}),
        (-336, {"r3": 1, "y1": 1}), (624, {"y1": 1}),
        (-6, {"y7": 1}), (6, {"r1": 1, "y8": 1}), (90, {"y9": 1}),
        (1, {"r1": 1, "y11": 1}), (6, {"y12": 1}),
    ])
    E4 = _poly([
        (3, {"r1": 1, "r3": 1, "y2": 1}), (21, {"r1": 1, "y2": 1}),
        (42, {"r3": 1, "y2": 1}), (78, {"y2": 1}),
        (-3, {"r2": 1, "y7": 1}), (-21, {"y7": 1}),
        (12, {"r2": 1, "y8": 1}), (-132, {"y8": 1}),
        (15, {"r2": 1, "y9": 1}), (-15, {"y9": 1}),
        (2, {"r2": 1, "y11": 1}), (6, {"y11": 1}),
        (-6, {"r2": 1, "y12": 1}), (6, {"y12": 1}),
    ])
    E5 = _poly([
        (-3, {"r1": 1, "r2": 1, "y3": 1}), (-21, {"r1": 1, "y3": 1}),
        (42, {"r2": 1, "y3": 1}), (78, {"y3": 1}),
        # leading coordinate coupling corrected to r3 (errata)
        (3, {"r3": 1, "y7": 1}), (21, {"y7": 1}),
        (12, {"r3": 1, "y8": 1}), (-132, {"y8": 1}),
        (-15, {"r3": 1, "y9": 1}), (15, {"y9": 1}),
        (2, {"r3": 1, "y11": 1}), (6, {"y11": 1}),
        (6, {"r3": 1, "y12": 1}), (-6, {"y12": 1}),
    ])
    return E1, E2, E3, E4, E5


def equations(tag: str) -> tuple[MPoly, ...]:
    """Stored equation sets by tag: Q_system, eqs_3_2, eqs_4_5."""
    if tag == "Q_system":
        return delta_coordinate_system()
    if tag == "eqs_3_2":
        return restricted_system_3_2()
    if tag == "eqs_4_5":
        return y_equations_4_5()
    raise KeyError(f"unknown equation set {tag!r}")


# ---------------------------------------------------------------------------
# The finite symmetry group and its stored actions


@lru_cache(maxsize=1)
def generators() -> dict[str, GroupElt]:
    zeta = CycScalar.zeta()
    inv_sqrt2 = scalar_inverse(CycScalar.sqrt2())
    return {
        "omega": GroupElt(0, 1, -1, 0),
        "rho": GroupElt(-_I, 0, 0, _I),
        "tau": GroupElt(-zeta ** 3, 0, 0, zeta),
        "sigma": GroupElt(inv_sqrt2 * zeta ** 3, -inv_sqrt2 * zeta ** 3,
                          -inv_sqrt2 * zeta, -inv_sqrt2 * zeta),
    }


@lru_cache(maxsize=1)
def quartic_stabilizer_elements() -> dict[str, GroupElt]:
    g = generators()
    return {
        "e": GroupElt.identity(),
        "omega": g["omega"],
        "rho": g["rho"],
        "omega_rho": g["omega"] * g["rho"],
    }


def _rows_to_matrix(rows: Sequence[Sequence]) -> list[list]:
    return [[(_F(v) if isinstance(v, int) else v) for v in row] for row in rows]


@lru_cache(maxsize=1)
def action_table() -> dict[str, list[list]]:
    """Stored 15x15 coordinate action of the four generators.

    Row k gives the new k-th coordinate as a combination of the old ones;
    column j is therefore the image of the j-th basis vector.
    """
    def diag(*entries):
        return [[entries[i] if i == j else 0 for j in range(15)] for i in range(15)]

    omega = diag(-1, 1, -1, -1, 1, -1, 1, 1, 1, 1, 1, 1, -1, 1, -1)
    rho = diag(1, -1, -1, 1, -1, -1, 1, 1, 1, 1, 1, 1, 1, -1, -1)

    tau = [[_F(0)] * 15 for _ in range(15)]
    tau[0][0] = -1
    tau[1][2] = -_I
    tau[2][1] = -_I
    tau[3][3] = 1
    tau[4][5] = -_I
    tau[5][4] = -_I
    tau[6][6] = 1
    tau[7][7] = -1
    tau[8][8] = 1
    tau[9][9] = 1
    tau[10][10] = -1
    tau[11][11] = 1
    tau[12][12] = -1
    tau[13][14] = _I
    tau[14][13] = _I

    sigma = [[_F(0)] * 15 for _ in range(15)]
    sigma[0][2] = 4
    sigma[1][0] = -_I * _F(1, 4)
    sigma[2][1] = _I
    sigma[3][5] = -8
    sigma[4][3] = -_I * _F(1, 8)
    sigma[5][4] = -_I
    sigma[6][6], sigma[6][7], sigma[6][8] = _F(1, 8), _F(7, 2), _F(35, 8)
    sigma[7][6], sigma[7][7], sigma[7][8] = _F(-1, 8), _F(-1, 2), _F(5, 8)
    sigma[8][6], sigma[8][7], sigma[8][8] = _F(1, 8), _F(-1, 2), _F(3, 8)
    sigma[9][9] = 1
    sigma[10][10], sigma[10][11] = _F(-1, 2), _F(-3, 2)
    sigma[11][10], sigma[11][11] = _F(1, 2), _F(-1, 2)
    sigma[12][14] = 2
    sigma[13][12] = _I * _F(1, 2)
    sigma[14][13] = -_I

    return {
        "omega": _rows_to_matrix(omega),
        "rho": _rows_to_matrix(rho),
        "tau": _rows_to_matrix(tau),
        "sigma": _rows_to_matrix(sigma),
    }


def induced_vec15_matrix(g: GroupElt, convention: str | None = None) -> list[list]:
    """15x15 coordinate matrix induced by the matrix action on the basis."""
    columns: list[list] = []
    for j in range(15):
        if j == 9:
            columns.append(unit15(9))
            continue
        f8, f0, f4 = assemble(unit15(j))
        if j < 9:
            image = group_act(g, f8, convention)
            col = octic_coordinates(image) + [_F(0)] * 6
        else:
            image = group_act(g, f4, convention)
            col = [_F(0)] * 10 + quartic_coordinates(image)
        columns.append(col)
    return [[columns[j][i] for j in range(15)] for i in range(15)]


def octic_block(mat15: Sequence[Sequence]) -> list[list]:
    return [list(row[:9]) for row in mat15[:9]]


def quartic_block(mat15: Sequence[Sequence]) -> list[list]:
    return [list(row[10:]) for row in mat15[10:]]


@lru_cache(maxsize=1)
def parameter_action() -> dict[str, list[list]]:
    """Stored 3x3 action on the stratum parameter triple."""
    tau = [[-1, 0, 0], [0, 0, 1], [0, 1, 0]]
    sigma = [[0, 0, -2], [_F(1, 2), 0, 0], [0, -1, 0]]
    return {"tau": _rows_to_matrix(tau), "sigma": _rows_to_matrix(sigma)}


@lru_cache(maxsize=1)
def chart_space_action() -> dict[str, list[list]]:
    """Stored 9x9 projective action on the chart-image coordinates."""
    tau = [[_F(0)] * 9 for _ in range(9)]
    for i, v in enumerate([1, 0, 0, 1, -1, 1, 1, -1, 1]):
        tau[i][i] = _F(v)
    tau[1][2] = _F(-1)
    tau[2][1] = _F(-1)

    sigma = [[_F(0)] * 9 for _ in range(9)]
    sigma[0][2] = _F(1, 16)
    sigma[1][0] = _F(-16)
    sigma[2][1] = _F(-1)
    sigma[3][3], sigma[3][4], sigma[3][5] = _F(1, 8), _F(7, 2), _F(35, 8)
    sigma[4][3], sigma[4][4], sigma[4][5] = _F(-1, 8), _F(-1, 2), _F(5, 8)
    sigma[5][3], sigma[5][4], sigma[5][5] = _F(1, 8), _F(-1, 2), _F(3, 8)
    sigma[6][6] = _F(1)
    sigma[7][7], sigma[7][8] = _F(-1, 2), _F(-3, 2)
    sigma[8][7], sigma[8][8] = _F(1, 2), _F(-1, 2)
    return {"tau": tau, "sigma": sigma}


@lru_cache(maxsize=1)
def block_permutation() -> dict[str, dict[int, int]]:
    """Stored permutation of the three coordinate pairs (x_j, x_{j+3})."""
    return {
        "tau": {1: 1, 2: 3, 3: 2},
        "sigma": {1: 2, 2: 3, 3: 1},
    }


# ---------------------------------------------------------------------------
# The chart map


@lru_cache(maxsize=1)
def chart_numerators_symbolic() -> tuple[MPoly, ...]:
    """The chart image with denominators cleared by x1*x2*x3."""
    x = {n: MPoly.var(n, DEFAULT_TABLE) for n in ("x1", "x2", "x3", "x7", "x8", "x9",
                                                  "s0", "s1", "s2")}
    prod = x["x1"] * x["x2"] * x["x3"]
    return (
        x["x2"] ** 2 * x["x3"] ** 2,
        x["x1"] ** 2 * x["x3"] ** 2,
        x["x1"] ** 2 * x["x2"] ** 2,
        x["x7"] * prod,
        x["x8"] * prod,
        x["x9"] * prod,
        x["s0"] * prod,
        x["s1"] * prod,
        x["s2"] * prod,
    )


def pi_chart(coords15: Sequence) -> tuple[tuple, ProjPoint]:
    """Exact chart map on the open locus x1*x2*x3 != 0, s3 = s4 = s5 = 0."""
    v = list(coords15)
    if len(v) != 15:
        raise ValueError("expected 15 coordinates")
    if not all(scalar_is_zero(v[i] if not isinstance(v[i], int) else _F(v[i]))
               for i in (12, 13, 14)):
        raise ValueError("point outside the chart domain: trailing quartic "
                         "coordinates must vanish")
    x1, x2, x3 = v[0], v[1], v[2]
    for val in (x1, x2, x3):
        if scalar_is_zero(_F(val) if isinstance(val, int) else val):
            raise ValueError("point outside the chart domain: x1*x2*x3 = 0")
    i1, i2, i3 = (scalar_inverse(_F(t) if isinstance(t, int) else t)
                  for t in (x1, x2, x3))
    r = (v[3] * i1, v[4] * i2, v[5] * i3)
    y = ProjPoint([x2 * x3 * i1, x3 * x1 * i2, x1 * x2 * i3,
                   v[6], v[7], v[8], v[9], v[10], v[11]], space="P8")
    return r, y


# ---------------------------------------------------------------------------
# Distinguished points


@lru_cache(maxsize=1)
def special_points() -> dict:
    """The anchor points every downstream check refers to."""
    five_e7_plus_e9 = [_F(0)] * 15
    five_e7_plus_e9[6], five_e7_plus_e9[8] = _F(5), _F(1)

    base_point = unit15(9)  # the constant form alone

    crossing = [_F(0)] * 15
    crossing[0] = _F(20)
    crossing[1] = _F(-5) * _I
    crossing[2] = _F(5)
    crossing[6] = _F(65) * _I
    crossing[8] = _F(13) * _I

    u_prime = ProjPoint([0, 0, 0, 0, 0, 0, 1, 0, 0], space="P8")
    u_dprime_0 = ProjPoint([_F(-5, 4), 20, -20, 65, 0, 13, 0, 0, 0], space="P8")

    # Isolated octic solutions with all six leading coordinates zero,
    # written as (x7, x8, x9).
    sparse_solutions = (
        (_F(5), _F(0), _F(1)),
        (_F(5), _F(0), _F(-1)),
        (_F(15), _F(5), _F(-1)),
        (_F(15), _F(-5), _F(-1)),
    )

    return {
        "base_point": base_point,
        "invariant_octic": five_e7_plus_e9,
        "crossing_point": crossing,
        "u_prime": u_prime,
        "u_dprime_0": u_dprime_0,
        "sparse_solutions": sparse_solutions,
    }


def sparse_solution_vec9(p: tuple) -> list:
    v: list = [_F(0)] * 9
    v[6], v[7], v[8] = p
    return v


# Families of octic solutions on the first single-pair stratum, symbolic in
# the parameter r1 and the auxiliary square root a with a^2 = 25 r1^2 - 900.

def square_root_relation() -> MPoly:
    return _poly([(25, {"r1": 2}), (-900, {})])


def stratum1_solution_families() -> tuple[tuple[list, ...], MPoly]:
    """Octic 9-vectors (entries MPoly in r1, a) and the defining relation."""
    t = DEFAULT_TABLE
    r1 = MPoly.var("r1", t)
    a = MPoly.var("a", t)
    one = MPoly.const(1, t)
    zero = MPoly.zero(t)

    fams = []
    for sign in (1, -1):
        v = [zero] * 9
        v[0] = MPoly.const(sign, t)
        v[3] = MPoly.const(sign, t) * r1
        v[6] = r1
        v[7] = one
        fams.append(v)
    for sign in (1, -1):
        v = [zero] * 9
        v[0] = MPoly.const(sign, t) * a
        v[3] = MPoly.const(sign, t) * r1 * a
        v[6] = MPoly.const(90, t) - 5 * r1 ** 2
        v[7] = -5 * r1
        v[8] = MPoly.const(6, t)
        fams.append(v)
    return tuple(fams), square_root_relation()


# ---------------------------------------------------------------------------
# Stratum bookkeeping


@lru_cache(maxsize=1)
def domain_inequations() -> tuple[MPoly, ...]:
    """Leading-coefficient conditions that empty the mixed strata."""
    return (
        _poly([(48, {"r2": 1, "r3": 1}), (-336, {"r2": 1}), (-336, {"r3": 1}),
               (624, {})]),
        _poly([(3, {"r1": 1, "r3": 1}), (21, {"r1": 1}), (42, {"r3": 1}), (78, {})]),
        _poly([(-3, {"r1": 1, "r2": 1}), (-21, {"r1": 1}), (42, {"r2": 1}), (78, {})]),
    )


def restricted_octic_quadrics(r: tuple) -> tuple[MPoly, ...]:
    """The five quadrics on the parameterized linear space, in the six free
    coordinates x1, x2, x3, x7, x8, x9."""
    r1, r2, r3 = (_F(v) if isinstance(v, int) else v for v in r)
    t = DEFAULT_TABLE
    bindings = {
        "x4": r1 * MPoly.var("x1", t),
        "x5": r2 * MPoly.var("x2", t),
        "x6": r3 * MPoly.var("x3", t),
    }
    return tuple(q.substitute(bindings) for q in pure_quadric_parts())


def octic_vector_on_slice(r: tuple, free: Sequence) -> list:
    """Lift (x1, x2, x3, x7, x8, x9) to the full 9-vector on the slice."""
    x1, x2, x3, x7, x8, x9 = free
    r1, r2, r3 = r
    return [x1, x2, x3, r1 * x1, r2 * x2, r3 * x3, x7, x8, x9]


# ---------------------------------------------------------------------------
# The two linear subspaces of the projection argument


@lru_cache(maxsize=1)
def target_space_conditions() -> tuple[MPoly, ...]:
    """Linear forms cutting the projection target out of the chart space."""
    t = DEFAULT_TABLE
    y = {n: MPoly.var(n, t) for n in Y_NAMES}
    return (y["y1"], y["y2"], y["y3"], y["y7"] + 7 * y["y9"], y["y10"])


@lru_cache(maxsize=1)
def target_space_basis() -> tuple[tuple, ...]:
    """Spanning 9-vectors of the projection target (coordinate order y1..y12)."""
    def vec(**vals):
        v = [_F(0)] * 9
        for name, val in vals.items():
            v[Y_NAMES.index(name)] = _F(val)
        return tuple(v)

    return (
        vec(y8=1),
        vec(y7=-7, y9=1),
        vec(y11=1),
        vec(y12=1),
    )


@lru_cache(maxsize=1)
def center_space_vectors() -> tuple[tuple, ...]:
    """Spanning 9-vectors of the projection center at parameter zero."""
    pts = special_points()
    u_prime = tuple(pts["u_prime"].coords)
    u_dprime = tuple(pts["u_dprime_0"].coords)

    def unit(name):
        v = [_F(0)] * 9
        v[Y_NAMES.index(name)] = _F(1)
        return tuple(v)

    return (u_prime, u_dprime, unit("y1"), unit("y2"), unit("y3"))


# ---------------------------------------------------------------------------
# Invariant subspace data


@lru_cache(maxsize=1)
def expected_h_fixed() -> tuple[list, ...]:
    return tuple(unit15(i) for i in (6, 7, 8, 9, 10, 11))


@lru_cache(maxsize=1)
def expected_full_group_fixed() -> tuple[list, ...]:
    v = [_F(0)] * 15
    v[6], v[8] = _F(5), _F(1)
    return (v, unit15(9))


@lru_cache(maxsize=1)
def module_decomposition() -> tuple[tuple[list, ...], ...]:
    """The stored seven-summand invariant decomposition (15 = 3+3+2+1+1+2+3)."""
    pair = [_F(0)] * 15
    pair[6], pair[8] = _F(7), _F(-1)
    inv = [_F(0)] * 15
    inv[6], inv[8] = _F(5), _F(1)
    return (
        (unit15(0), unit15(1), unit15(2)),
        (unit15(3), unit15(4), unit15(5)),
        (unit15(7), pair),
        (inv,),
        (unit15(9),),
        (unit15(10), unit15(11)),
        (unit15(12), unit15(13), unit15(14)),
    )


@lru_cache(maxsize=1)
def rotation_invariant_octics() -> tuple[list, ...]:
    """Octic 9-vectors spanning the order-3 generator's fixed space."""
    v1 = [_F(0)] * 9
    v1[6], v1[8] = _F(5), _F(1)
    v2: list = [_F(0)] * 9
    v2[3], v2[4], v2[5] = _F(8), -_I, _F(-1)
    v3: list = [_F(0)] * 9
    v3[0], v3[1], v3[2] = _F(4), -_I, _F(1)
    return (v1, v2, v3)


@lru_cache(maxsize=1)
def rotation_invariant_quartic() -> list:
    """Quartic 5-vector spanning the order-3 generator's fixed space."""
    v: list = [_F(0)] * 5
    v[2], v[3], v[4] = _F(2), _I, _F(1)
    return v


def expected_orbit_quadratic() -> MPoly:
    """The stored quadratic coefficient on the invariant-plane image."""
    return _poly([
        (120, {"alpha1": 1, "alpha3": 1}),
        (24 * _I, {"alpha2": 2}),
        (-312 * _I, {"alpha3": 2}),
    ])


# ---------------------------------------------------------------------------
# Export


def _scalar_str(v) -> str:
    return str(v)


def export_constants() -> dict:
    """All stored constants as a JSON-compatible dictionary."""
    pts = special_points()
    return {
        "coordinate_names": list(VEC15_NAMES),
        "chart_coordinate_names": list(Y_NAMES),
        "parameter_names": list(R_NAMES),
        "octic_basis_coefficients": [[str(_F(c)) for c in row]
                                     for row in _OCTIC_BASIS_COEFFS],
        "quartic_basis_coefficients": [[str(_F(c)) for c in row]
                                       for row in _QUARTIC_BASIS_COEFFS],
        "coordinate_system": [str(p) for p in delta_coordinate_system()],
        "restricted_system": [str(p) for p in restricted_system_3_2()],
        "chart_image_equations": [str(p) for p in y_equations_4_5()],
        "action_table": {name: [[_scalar_str(v) for v in row] for row in mat]
                         for name, mat in action_table().items()},
        "parameter_action": {name: [[_scalar_str(v) for v in row] for row in mat]
                             for name, mat in parameter_action().items()},
        "chart_space_action": {name: [[_scalar_str(v) for v in row] for row in mat]
                               for name, mat in chart_space_action().items()},
        "block_permutation": {name: {str(k): v for k, v in perm.items()}
                              for name, perm in block_permutation().items()},
        "special_points": {
            "base_point": [_scalar_str(v) for v in pts["base_point"]],
            "invariant_octic": [_scalar_str(v) for v in pts["invariant_octic"]],
            "crossing_point": [_scalar_str(v) for v in pts["crossing_point"]],
            "u_prime": [_scalar_str(v) for v in pts["u_prime"].coords],
            "u_dprime_0": [_scalar_str(v) for v in pts["u_dprime_0"].coords],
            "sparse_solutions": [[_scalar_str(v) for v in p]
                                 for p in pts["sparse_solutions"]],
        },
        "domain_inequations": [str(p) for p in domain_inequations()],
        "target_space_conditions": [str(p) for p in target_space_conditions()],
        "square_root_relation": str(square_root_relation()),
    }
