"""
Univariate polynomials with exact rational coefficients.

Coefficients are stored in ascending degree order with trailing zeros
trimmed; the zero polynomial has no coefficients. The same class holds
characteristic and minimal polynomials, filter polynomials h(·), and the
q(·) of the filter family αH + q(S).
"""

import math
from fractions import Fraction
from typing import Iterable, Union

from shiftcert.algebra.matrix import Scalar, _as_fraction
from shiftcert.errors import ZeroPolynomialError

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class Polynomial:
    """Immutable polynomial over ℚ, ascending coefficient order."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        values = [_as_fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[Scalar]) -> "Polynomial":
        return cls(coeffs)

    @classmethod
    def monomial(cls, degree: int, coefficient: Scalar = 1) -> "Polynomial":
        return cls([0] * degree + [coefficient])

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls([value])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "Polynomial":
        """Monic polynomial ∏(λ − r)."""
        result = cls([1])
        for root in roots:
            result = result * cls([-_as_fraction(root), 1])
        return result

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def leading(self) -> Fraction:
        if not self._coeffs:
            return Fraction(0)
        return self._coeffs[-1]

    def is_monic(self) -> bool:
        return self.leading == 1

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ZeroPolynomialError("The zero polynomial has no monic form")
        lead = self.leading
        return Polynomial(c / lead for c in self._coeffs)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        length = max(len(self._coeffs), len(other._coeffs))
        a = self._coeffs + (Fraction(0),) * (length - len(self._coeffs))
        b = other._coeffs + (Fraction(0),) * (length - len(other._coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            factor = _as_fraction(other)
            return Polynomial(factor * c for c in self._coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        product = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __divmod__(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Exact long division: self = q·divisor + r with deg r < deg divisor."""
        if divisor.is_zero():
            raise ZeroPolynomialError("Polynomial division by the zero polynomial")
        remainder = list(self._coeffs)
        d = divisor.degree
        lead = divisor.leading
        if len(remainder) <= d:
            return Polynomial(), Polynomial(remainder)
        quotient = [Fraction(0)] * (len(remainder) - d)
        for shift in range(len(remainder) - d - 1, -1, -1):
            factor = remainder[shift + d] / lead
            quotient[shift] = factor
            if factor == 0:
                continue
            for k, c in enumerate(divisor._coeffs):
                remainder[shift + k] -= factor * c
        return Polynomial(quotient), Polynomial(remainder[:d])

    def __floordiv__(self, divisor: "Polynomial") -> "Polynomial":
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: "Polynomial") -> "Polynomial":
        return divmod(self, divisor)[1]

    def __call__(self, x: Scalar) -> Fraction:
        """Horner evaluation at a rational point."""
        value = _as_fraction(x)
        result = Fraction(0)
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self._coeffs) if k > 0)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        """Monic greatest common divisor (zero if both are zero)."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a if a.is_zero() else a.monic()

    def squarefree_part(self) -> "Polynomial":
        """p / gcd(p, p'), monic; every real root of the result is simple."""
        if self.degree <= 0:
            return self.monic() if not self.is_zero() else self
        return (self // self.gcd(self.derivative())).monic()

    def integer_coefficients(self) -> list[int]:
        """Coefficients scaled by the lcm of denominators, divided by their content."""
        if self.is_zero():
            return []
        scale = math.lcm(*(c.denominator for c in self._coeffs))
        ints = [int(c * scale) for c in self._coeffs]
        content = math.gcd(*ints)
        return [value // content for value in ints]

    # ------------------------------------------------------------------
    # Presentation
    # ------------------------------------------------------------------

    def to_strings(self) -> list[str]:
        return [str(c) for c in self._coeffs]

    def pretty(self, variable: str = "λ") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for power in range(self.degree, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                monomial = variable if power == 1 else f"{variable}{str(power).translate(_SUPERSCRIPTS)}"
                body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({self.pretty()})"


def poly_divides(a: Polynomial, b: Polynomial) -> bool:
    """
    True iff a divides b exactly over ℚ.

    Raises:
        ZeroPolynomialError: If a is the zero polynomial
    """
    if a.is_zero():
        raise ZeroPolynomialError("Divisibility by the zero polynomial is undefined")
    return (b % a).is_zero()


def _divisors(value: int) -> list[int]:
    value = abs(value)
    small, large = [], []
    d = 1
    while d * d <= value:
        if value % d == 0:
            small.append(d)
            if d * d != value:
                large.append(value // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Polynomial) -> list[tuple[Fraction, int]]:
    """
    Rational roots of p with multiplicities, ascending.

    Uses the rational root theorem on the primitive integer form of p, then
    strips each root by repeated exact division.
    """
    if p.is_zero():
        raise ZeroPolynomialError("The zero polynomial has every number as a root")
    roots: list[tuple[Fraction, int]] = []
    remaining = p
    zero_multiplicity = 0
    while remaining.degree > 0 and remaining.coeffs[0] == 0:
        remaining = Polynomial(remaining.coeffs[1:])
        zero_multiplicity += 1
    if zero_multiplicity:
        roots.append((Fraction(0), zero_multiplicity))
    if remaining.degree <= 0:
        return sorted(roots)

    ints = remaining.integer_coefficients()
    candidates = set()
    for numerator in _divisors(ints[0]):
        for denominator in _divisors(ints[-1]):
            candidates.add(Fraction(numerator, denominator))
            candidates.add(Fraction(-numerator, denominator))
    for candidate in sorted(candidates):
        if remaining.degree <= 0:
            break
        multiplicity = 0
        linear = Polynomial([-candidate, 1])
        while remaining.degree > 0:
            quotient, remainder = divmod(remaining, linear)
            if not remainder.is_zero():
                break
            remaining = quotient
            multiplicity += 1
        if multiplicity:
            roots.append((candidate, multiplicity))
    return sorted(roots)


def brackets_root(p: Polynomial, x: Scalar, radius: Scalar) -> bool:
    """
    Exact root localization: does p have a real root in [x − radius, x + radius]?

    Works on the square-free part, where every real root is a sign change,
    so the answer is decided by exact evaluation at the two endpoints (or a
    zero at the centre).
    """
    q = p.squarefree_part()
    centre = _as_fraction(x) if not isinstance(x, float) else Fraction(x)
    width = _as_fraction(radius) if not isinstance(radius, float) else Fraction(radius)
    left, right = q(centre - width), q(centre + width)
    return q(centre) == 0 or left == 0 or right == 0 or (left < 0) != (right < 0)

