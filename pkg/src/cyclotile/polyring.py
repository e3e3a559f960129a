"""Dense integer-coefficient polynomials with exact arithmetic.

Coefficients are Python ints stored in ascending degree order, so every
value is exact at any size. The canonical form never has a trailing zero;
the zero polynomial is the empty tuple and its degree is None rather than
any numeric sentinel.
"""

from __future__ import annotations

import dataclasses

from .errors import InexactDivision


@dataclasses.dataclass(frozen=True, init=False)
class IntPolynomial:
    """An element of Z[x] in dense ascending-coefficient form."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        return cls([0] * exponent + [coefficient])

    @property
    def degree(self) -> int | None:
        """Degree of the polynomial, None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, exponent: int) -> int:
        return self.coeffs[exponent] if 0 <= exponent < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, cf in enumerate(b):
            out[i] += cf
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-cf for cf in self.coeffs])

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * cf for cf in self.coeffs])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            cf = self.coeffs[e]
            if cf == 0:
                continue
            mag = abs(cf)
            if e == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else "%d*" % mag
                body = "%sx^%d" % (head, e) if e > 1 else "%sx" % head
            parts.append(("-" if cf < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += " %s %s" % (sign, body)
        return text


def poly_mul(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Exact product in Z[x]."""
    return f * g


def poly_divmod(f: IntPolynomial, g: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Quotient and remainder of f by g over Z[x].

    Every elimination step must divide exactly; g monic always works, and a
    non-monic g raises InexactDivision as soon as a leading term fails to
    divide. Division by the zero polynomial raises ZeroDivisionError.
    """
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero() or len(f.coeffs) < len(g.coeffs):
        return IntPolynomial(), f
    rem = list(f.coeffs)
    lead = g.coeffs[-1]
    shift = len(g.coeffs) - 1
    quot = [0] * (len(rem) - shift)
    for i in range(len(rem) - 1, shift - 1, -1):
        cf = rem[i]
        if cf == 0:
            continue
        q, leftover = divmod(cf, lead)
        if leftover:
            raise InexactDivision("leading coefficient %d does not divide %d" % (lead, cf))
        quot[i - shift] = q
        for j, gc in enumerate(g.coeffs):
            rem[i - shift + j] -= q * gc
    return IntPolynomial(quot), IntPolynomial(rem[:shift])


def poly_exact_div(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """The quotient f / g, defined only when g divides f exactly in Z[x]."""
    quot, rem = poly_divmod(f, g)
    if not rem.is_zero():
        raise InexactDivision("remainder %s is nonzero" % (rem,))
    return quot


def reduce_mod_cyclic(f: IntPolynomial, modulus: int) -> IntPolynomial:
    """Reduce f modulo x^P - 1 by folding every exponent into [0, P)."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    out = [0] * modulus
    for e, cf in enumerate(f.coeffs):
        out[e % modulus] += cf
    return IntPolynomial(out)


def eval_at(f: IntPolynomial, point: int) -> int:
    """Exact value of f at an integer point, by Horner's rule."""
    acc = 0
    for cf in reversed(f.coeffs):
        acc = acc * point + cf
    return acc


def power_minus_one(modulus: int) -> IntPolynomial:
    """The cyclic modulus x^P - 1."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    return IntPolynomial([-1] + [0] * (modulus - 1) + [1])


def all_ones(modulus: int) -> IntPolynomial:
    """1 + x + ... + x^(P-1), the mask of the full group."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    return IntPolynomial([1] * modulus)
