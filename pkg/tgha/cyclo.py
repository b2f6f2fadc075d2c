"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Values are stored in the power basis 1, z, ..., z^(phi(N)-1) reduced modulo
the N-th cyclotomic polynomial, so equality of coefficient tuples at a common
conductor is equality of field elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import math
from typing import Final

from sympy import cyclotomic_poly, mobius, totient

from .exceptions import ConductorMismatch, DivisionByZero, InternalInconsistency, NotASubfield

Scalar = int | Fraction


@lru_cache(maxsize=None)
def cyclotomic_coefficients(conductor: int) -> tuple[int, ...]:
    """Return the coefficients of the conductor-th cyclotomic polynomial, constant term first."""
    if conductor < 1:
        raise ValueError(f"conductor must be positive, got {conductor}")
    poly = cyclotomic_poly(conductor, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Return Euler's totient of n."""
    return int(totient(n))


@lru_cache(maxsize=None)
def _normalized_trace(conductor: int, k: int) -> Fraction:
    # Tr(z^k) / [Q(z):Q] depends only on the order of z^k.
    order = conductor // math.gcd(conductor, k)
    return Fraction(int(mobius(order)), euler_phi(order))


def _reduce(conductor: int, coeffs: list[Fraction]) -> tuple[Fraction, ...]:
    modulus = cyclotomic_coefficients(conductor)
    degree = len(modulus) - 1
    work = [Fraction(c) for c in coeffs]
    if len(work) < degree:
        work.extend([Fraction(0)] * (degree - len(work)))
    for i in range(len(work) - 1, degree - 1, -1):
        lead = work[i]
        if lead:
            base = i - degree
            for j, m in enumerate(modulus[:degree]):
                if m:
                    work[base + j] -= lead * m
    return tuple(work[:degree])


@dataclass(frozen=True, slots=True, eq=False)
class Cyclotomic:
    """Element of Q(zeta_N) in the reduced power basis."""

    conductor: int
    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_poly(cls, conductor: int, coeffs: list[Fraction] | list[int]) -> Cyclotomic:
        """Reduce an arbitrary polynomial in zeta_N to canonical form."""
        return cls(conductor, _reduce(conductor, list(coeffs)))

    @classmethod
    def rational(cls, value: Scalar, conductor: int = 1) -> Cyclotomic:
        """Embed a rational number."""
        coeffs = [Fraction(0)] * euler_phi(conductor)
        coeffs[0] = Fraction(value)
        return cls(conductor, tuple(coeffs))

    @property
    def is_rational(self) -> bool:
        """Return whether the value lies in Q."""
        return not any(self.coeffs[1:])

    @property
    def rational_value(self) -> Fraction:
        """Return the value as a Fraction; only defined for rationals."""
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _scaled(self, factor: Fraction) -> Cyclotomic:
        return Cyclotomic(self.conductor, tuple(c * factor for c in self.coeffs))

    def _shifted(self, amount: Fraction) -> Cyclotomic:
        return Cyclotomic(self.conductor, (self.coeffs[0] + amount, *self.coeffs[1:]))

    def __add__(self, other: Cyclotomic | Scalar) -> Cyclotomic:
        if isinstance(other, int | Fraction):
            return self._shifted(Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        x, y = _common(self, other)
        return Cyclotomic(x.conductor, tuple(a + b for a, b in zip(x.coeffs, y.coeffs, strict=True)))

    __radd__ = __add__

    def __neg__(self) -> Cyclotomic:
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Cyclotomic | Scalar) -> Cyclotomic:
        if isinstance(other, int | Fraction):
            return self._shifted(-Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> Cyclotomic:
        return (-self) + other

    def __mul__(self, other: Cyclotomic | Scalar) -> Cyclotomic:
        if isinstance(other, int | Fraction):
            return self._scaled(Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.is_rational:
            return self._scaled(other.coeffs[0])
        if self.is_rational:
            return other._scaled(self.coeffs[0])
        x, y = _common(self, other)
        product = [Fraction(0)] * (2 * len(x.coeffs) - 1)
        for i, a in enumerate(x.coeffs):
            if a:
                for j, b in enumerate(y.coeffs):
                    if b:
                        product[i + j] += a * b
        return Cyclotomic.from_poly(x.conductor, product)

    __rmul__ = __mul__

    def inverse(self) -> Cyclotomic:
        """Return the multiplicative inverse, computed through the field norm."""
        if not self:
            raise DivisionByZero("inverse of zero")
        if self.is_rational:
            return Cyclotomic.rational(1 / self.coeffs[0], self.conductor)
        conjugates = Cyclotomic.rational(1, self.conductor)
        for a in range(2, self.conductor):
            if math.gcd(a, self.conductor) == 1:
                conjugates = conjugates * self.galois(a)
        norm = self * conjugates
        if not norm.is_rational:
            raise InternalInconsistency(f"norm of {self} is not rational")
        return conjugates._scaled(1 / norm.coeffs[0])

    def __truediv__(self, other: Cyclotomic | Scalar) -> Cyclotomic:
        if isinstance(other, int | Fraction):
            if not other:
                raise DivisionByZero("division by zero")
            return self._scaled(1 / Fraction(other))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> Cyclotomic:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> Cyclotomic:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = Cyclotomic.rational(1, self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def galois(self, a: int) -> Cyclotomic:
        """Apply the automorphism z -> z^a; a must be a unit mod the conductor."""
        n = self.conductor
        if math.gcd(a, n) != 1:
            raise ValueError(f"{a} is not a unit modulo {n}")
        poly = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            if c:
                poly[(k * a) % n] += c
        return Cyclotomic.from_poly(n, poly)

    def conjugate(self) -> Cyclotomic:
        """Return the complex conjugate."""
        if self.conductor <= 2 or self.is_rational:
            return self
        return self.galois(self.conductor - 1)

    def promote(self, conductor: int) -> Cyclotomic:
        """Embed into Q(zeta_M) for a multiple M of the conductor."""
        if conductor % self.conductor:
            raise NotASubfield(
                f"Q(zeta_{self.conductor}) is not a subfield of Q(zeta_{conductor})"
            )
        if conductor == self.conductor:
            return self
        step = conductor // self.conductor
        poly = [Fraction(0)] * conductor
        for k, c in enumerate(self.coeffs):
            poly[k * step] = c
        return Cyclotomic.from_poly(conductor, poly)

    def signed_root(self) -> tuple[int, int] | None:
        """Return (sign, k) with self == sign * z^k, or None if not a root of unity."""
        if self.is_rational:
            value = self.coeffs[0]
            if value in (1, -1):
                return (int(value), 0)
            return None
        for k in range(1, self.conductor):
            power = root_of_unity(self.conductor, k)
            if self.coeffs == power.coeffs:
                return (1, k)
            if all(a == -b for a, b in zip(self.coeffs, power.coeffs, strict=True)):
                return (-1, k)
        return None

    def is_root_of_unity(self) -> bool:
        """Return whether the value has finite multiplicative order."""
        return self.signed_root() is not None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            return self.is_rational and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coeffs == other.coeffs
        if self.is_rational and other.is_rational:
            return self.coeffs[0] == other.coeffs[0]
        common = math.lcm(self.conductor, other.conductor)
        return self.promote(common).coeffs == other.promote(common).coeffs

    def __hash__(self) -> int:
        # Normalized trace is invariant under promotion and agrees with hash() on Q.
        return hash(
            sum(
                (c * _normalized_trace(self.conductor, k) for k, c in enumerate(self.coeffs) if c),
                Fraction(0),
            )
        )

    def __str__(self) -> str:
        return to_literal(self)

    def __repr__(self) -> str:
        return f"Cyclotomic({self.conductor}, {to_literal(self)!r})"


def _common(x: Cyclotomic, y: Cyclotomic) -> tuple[Cyclotomic, Cyclotomic]:
    if x.conductor == y.conductor:
        return x, y
    if x.is_rational:
        return Cyclotomic.rational(x.coeffs[0], y.conductor), y
    if y.is_rational:
        return x, Cyclotomic.rational(y.coeffs[0], x.conductor)
    if y.conductor % x.conductor == 0:
        return x.promote(y.conductor), y
    if x.conductor % y.conductor == 0:
        return x, y.promote(x.conductor)
    raise ConductorMismatch(
        f"cannot combine conductors {x.conductor} and {y.conductor}"
    )


@lru_cache(maxsize=4096)
def root_of_unity(conductor: int, k: int) -> Cyclotomic:
    """Return zeta_N^k in canonical form."""
    k %= conductor
    return Cyclotomic.from_poly(conductor, [Fraction(0)] * k + [Fraction(1)])


def as_cyclotomic(value: Cyclotomic | Scalar, conductor: int = 1) -> Cyclotomic:
    """Coerce ints and Fractions to Cyclotomic."""
    if isinstance(value, Cyclotomic):
        return value
    return Cyclotomic.rational(value, conductor)


ZERO: Final = Cyclotomic.rational(0)
ONE: Final = Cyclotomic.rational(1)


def to_literal(x: Cyclotomic, conductor: int | None = None) -> str:
    """Format x in the literal syntax, written over zeta_conductor when possible."""
    if conductor is not None and conductor != x.conductor and not conductor % x.conductor:
        x = x.promote(conductor)
    if x.is_rational:
        return str(x.coeffs[0])
    signed = x.signed_root()
    if signed is not None:
        sign, k = signed
        return f"{'-' if sign < 0 else ''}z^{k}"
    parts: list[tuple[str, str]] = []
    for k, c in enumerate(x.coeffs):
        if not c:
            continue
        magnitude = abs(c)
        if k == 0:
            body = str(magnitude)
        elif magnitude == 1:
            body = f"z^{k}"
        else:
            body = f"{magnitude}*z^{k}"
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text
