"""Cyclotomic polynomials and the cyclotomic divisor spectrum of a mask.

The n-th cyclotomic polynomial is obtained by exact division of x^n - 1
by the cyclotomic polynomials of the proper divisors of n, which keeps
everything in Z[x] with no floating point anywhere.
"""

from __future__ import annotations

import dataclasses
import functools

from .arith import divisors, is_prime_power, prime_power_base
from .errors import ZeroMask
from .polyring import (
    IntPolynomial,
    eval_at,
    poly_divmod,
    poly_exact_div,
    power_minus_one,
    reduce_mod_cyclic,
)


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial.

    Memoized; the cache is written once per key, so concurrent readers
    only ever observe finished values.
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = power_minus_one(n)
    for d in divisors(n)[:-1]:
        poly = poly_exact_div(poly, cyclotomic(d))
    return poly


def cyclotomic_divides(n: int, f: IntPolynomial) -> bool:
    """Whether the n-th cyclotomic polynomial divides f in Z[x]. f must be nonzero."""
    if f.is_zero():
        raise ValueError("divisibility test needs a nonzero polynomial")
    _, rem = poly_divmod(f, cyclotomic(n))
    return rem.is_zero()


@dataclasses.dataclass(frozen=True)
class DivisorSpectrum:
    """Which cyclotomic polynomials with index dividing P divide a given mask."""

    modulus: int
    divisors: frozenset[int]
    prime_power_subset: frozenset[int]

    def divisor_product(self) -> IntPolynomial:
        """Product of the cyclotomic divisors, a unit-free divisor of x^P - 1."""
        poly = IntPolynomial([1])
        for n in sorted(self.divisors):
            poly = poly * cyclotomic(n)
        return poly

    def divisor_product_at_one(self) -> int:
        return eval_at(self.divisor_product(), 1)


def divisor_spectrum(f: IntPolynomial, modulus: int) -> DivisorSpectrum:
    """Spectrum of f on the cyclic group of the given order.

    f is reduced modulo x^P - 1 first, which cannot change any of the
    divisibility answers for indices dividing P. A mask that reduces to
    zero has every answer trivially yes and is rejected as ZeroMask.
    """
    reduced = reduce_mod_cyclic(f, modulus)
    if reduced.is_zero():
        raise ZeroMask("mask vanishes modulo x^%d - 1" % modulus)
    hits = frozenset(n for n in divisors(modulus) if cyclotomic_divides(n, reduced))
    return DivisorSpectrum(
        modulus=modulus,
        divisors=hits,
        prime_power_subset=frozenset(n for n in hits if is_prime_power(n)),
    )


def prime_power_product_at_one(spectrum: DivisorSpectrum) -> int:
    """Value at 1 of the product over the prime-power part of the spectrum.

    Each cyclotomic polynomial with prime-power index p^e contributes p;
    an empty subset gives 1.
    """
    value = 1
    for n in spectrum.prime_power_subset:
        value *= prime_power_base(n)
    return value
