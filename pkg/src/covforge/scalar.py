"""Exact scalar arithmetic: rationals and the degree-4 cyclotomic field Q(zeta_8).

Every coefficient that enters a symbolic check lives in one of two exact
domains: `Rat` (arbitrary-precision reduced rationals, provided by the
standard library) or `CycScalar`, an element of Q(zeta_8) stored on the
power basis {1, z, z^2, z^3} with z^4 = -1.  The square root of 2 and the
imaginary unit both live in this field: i = z^2 and sqrt(2) = z - z^3.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from typing import Union

# Arbitrary-precision rational scalars.  Always reduced, denominator > 0.
Rat = Fraction

RatLike = Union[int, Fraction]

# Primitive 8th root of unity used by the complex embedding.
_ZETA_C = cmath.exp(1j * cmath.pi / 4)
_ZETA_POWERS = (1.0 + 0j, _ZETA_C, 1j, _ZETA_C * 1j)


def _as_rat(value: RatLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class CycScalar:
    """Element of Q(zeta_8) on the power basis {1, z, z^2, z^3}, z^4 = -1."""

    __slots__ = ("_c",)

    def __init__(self, c0: RatLike = 0, c1: RatLike = 0, c2: RatLike = 0,
                 c3: RatLike = 0) -> None:
        self._c = (_as_rat(c0), _as_rat(c1), _as_rat(c2), _as_rat(c3))

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rat(cls, value: RatLike) -> CycScalar:
        return cls(_as_rat(value))

    @classmethod
    def zero(cls) -> CycScalar:
        return _ZERO

    @classmethod
    def one(cls) -> CycScalar:
        return _ONE

    @classmethod
    def zeta(cls) -> CycScalar:
        return _GEN

    @classmethod
    def i(cls) -> CycScalar:
        """The imaginary unit, z^2."""
        return _I

    @classmethod
    def sqrt2(cls) -> CycScalar:
        """The positive square root of 2, namely z - z^3."""
        return _SQRT2

    # -- predicates / coordinates ----------------------------------------

    @property
    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self._c

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._c)

    def is_rational(self) -> bool:
        return self._c[1] == 0 and self._c[2] == 0 and self._c[3] == 0

    def rat(self) -> Fraction:
        """The value as a rational; raises if the element is irrational."""
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self._c[0]

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> CycScalar | None:
        if isinstance(other, CycScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        return CycScalar(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        return CycScalar(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__sub__(self)

    def __neg__(self) -> CycScalar:
        a = self._c
        return CycScalar(-a[0], -a[1], -a[2], -a[3])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        # Convolution with the reduction z^(k+4) = -z^k.
        acc = [Fraction(0)] * 4
        for ia in range(4):
            ca = a[ia]
            if ca == 0:
                continue
            for ib in range(4):
                cb = b[ib]
                if cb == 0:
                    continue
                k = ia + ib
                if k < 4:
                    acc[k] += ca * cb
                else:
                    acc[k - 4] -= ca * cb
        return CycScalar(*acc)

    __rmul__ = __mul__

    def inverse(self) -> CycScalar:
        """Multiplicative inverse, found by solving a 4x4 rational system.

        The system expresses self * x = 1 on the power basis; the
        coefficient matrix is the multiplication-by-self operator.
        """
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_8)")
        cols = [(self * _BASIS[j])._c for j in range(4)]
        # Augmented system M x = e0 with M[i][j] = cols[j][i].
        aug = [[cols[j][i] for j in range(4)] + [Fraction(1 if i == 0 else 0)]
               for i in range(4)]
        n = 4
        for col in range(n):
            piv = next(r for r in range(col, n) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            inv_p = Fraction(1) / aug[col][col]
            aug[col] = [v * inv_p for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return CycScalar(aug[0][4], aug[1][4], aug[2][4], aug[3][4])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> CycScalar:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        out, base = _ONE, self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def conj(self) -> CycScalar:
        """Complex conjugation, the field automorphism z -> -z^3."""
        a = self._c
        return CycScalar(a[0], -a[3], -a[2], -a[1])

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self._c[0])
        return hash(self._c)

    # -- embedding and display -------------------------------------------

    def embed(self) -> complex:
        """Image under the embedding sending z to exp(i*pi/4)."""
        out = 0j
        for c, zp in zip(self._c, _ZETA_POWERS):
            if c != 0:
                out += float(c) * zp
        return out

    def __repr__(self) -> str:
        return f"CycScalar({self._c[0]}, {self._c[1]}, {self._c[2]}, {self._c[3]})"

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        names = ("", "w", "i", "w^3")  # w = primitive 8th root, i = w^2
        parts: list[str] = []
        for c, name in zip(self._c, names):
            if c == 0:
                continue
            if not name:
                parts.append(str(c))
            elif c == 1:
                parts.append(name)
            elif c == -1:
                parts.append(f"-{name}")
            else:
                parts.append(f"{c}*{name}")
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


_ZERO = CycScalar(0)
_ONE = CycScalar(1)
_GEN = CycScalar(0, 1)
_I = CycScalar(0, 0, 1)
_SQRT2 = CycScalar(0, 1, 0, -1)
_BASIS = (_ONE, _GEN, _I, CycScalar(0, 0, 0, 1))

Scalar = Union[int, Fraction, CycScalar]


def as_cyc(value: Scalar) -> CycScalar:
    """Promote an exact scalar into Q(zeta_8)."""
    if isinstance(value, CycScalar):
        return value
    return CycScalar(_as_rat(value))


def scalar_is_zero(value) -> bool:
    if isinstance(value, CycScalar):
        return value.is_zero()
    return value == 0


def scalar_inverse(value: Scalar):
    """Exact inverse within the scalar's own domain."""
    if isinstance(value, CycScalar):
        return value.inverse()
    v = _as_rat(value)
    if v == 0:
        raise ZeroDivisionError("inverse of zero")
    return Fraction(1) / v


def scalar_conj(value: Scalar):
    if isinstance(value, CycScalar):
        return value.conj()
    return _as_rat(value)


def embed_complex(value) -> complex:
    """Complex image of an exact scalar (ring homomorphism)."""
    if isinstance(value, CycScalar):
        return value.embed()
    if isinstance(value, (int, Fraction)):
        return complex(float(value))
    if isinstance(value, complex):
        return value
    raise TypeError(f"cannot embed {value!r}")


def scalar_complexity(value: Scalar) -> int:
    """Bit-size proxy used to pick the least messy pivot in elimination."""
    if isinstance(value, CycScalar):
        return sum(c.numerator.bit_length() + c.denominator.bit_length()
                   for c in value.coords)
    v = _as_rat(value)
    return v.numerator.bit_length() + v.denominator.bit_length()
