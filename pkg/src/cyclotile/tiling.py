"""Integer tiles on a cyclic group and multitilings by translation.

A tile is an integer-valued function on Z/PZ. A second tile v is an
m-multitiling for u when the cyclic convolution of u and v is the
constant m; when v only takes the values 0 and 1 it is an m-tiling.
Existence of an m-multitiling is decided exactly by a divisibility test
on the mask polynomial of u, and both the general witness and the 0/1
prime-power witness are built from the cyclotomic divisor spectrum.
"""

from __future__ import annotations

import dataclasses

from .arith import is_prime_power
from .cyclotomic import (
    DivisorSpectrum,
    divisor_spectrum,
    prime_power_product_at_one,
)
from .errors import (
    ModulusMismatch,
    MultiplicityOutOfRange,
    NotExists,
    NotPrimePower,
)
from .polyring import (
    IntPolynomial,
    eval_at,
    poly_exact_div,
    power_minus_one,
    reduce_mod_cyclic,
)


@dataclasses.dataclass(frozen=True)
class Tile:
    """An integer-valued function on Z/PZ, one value per group element."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("a tile needs at least one value")

    @property
    def modulus(self) -> int:
        return len(self.values)


@dataclasses.dataclass(frozen=True)
class ExistenceVerdict:
    """Outcome of the multitiling divisibility test, with the numbers behind it."""

    passed: bool
    multiplicity: int
    mask_sum: int
    prime_power_product: int | None

    def __bool__(self) -> bool:
        return self.passed


@dataclasses.dataclass(frozen=True)
class MultitilingWitness:
    """A constructed m-multitiling together with its polynomial certificate."""

    tile: Tile
    multiplier: IntPolynomial
    multiplicity: int


def mask_polynomial(u: Tile) -> IntPolynomial:
    """The mask of a tile: sum of u(a) x^a over the group."""
    return IntPolynomial(u.values)


def tile_from_polynomial(f: IntPolynomial, modulus: int) -> Tile:
    """Read a polynomial back as a tile, folding exponents modulo the group order."""
    reduced = reduce_mod_cyclic(f, modulus)
    values = list(reduced.coeffs) + [0] * (modulus - len(reduced.coeffs))
    return Tile(tuple(values))


def verify_multitiling(u: Tile, v: Tile, multiplicity: int) -> bool:
    """Check by direct convolution that v covers the group m-fold with tile u."""
    if u.modulus != v.modulus:
        raise ModulusMismatch("tiles live on groups of order %d and %d" % (u.modulus, v.modulus))
    p = u.modulus
    for g in range(p):
        total = 0
        for h in range(p):
            total += u.values[(g - h) % p] * v.values[h]
        if total != multiplicity:
            return False
    return True


def _spectrum_of(u: Tile) -> DivisorSpectrum:
    return divisor_spectrum(mask_polynomial(u), u.modulus)


def multitiling_exists(u: Tile, multiplicity: int) -> ExistenceVerdict:
    """Decide whether any m-multitiling with tile u exists.

    The test is: the mask sum must be nonzero and must divide m times the
    value at 1 of the prime-power part of the spectrum. A mask sum of zero
    is an automatic fail, never an error.
    """
    if multiplicity == 0:
        raise ValueError("multiplicity must be nonzero")
    mask = mask_polynomial(u)
    mask_sum = eval_at(mask, 1)
    if mask.is_zero():
        return ExistenceVerdict(False, multiplicity, 0, None)
    product = prime_power_product_at_one(_spectrum_of(u))
    passed = mask_sum != 0 and (multiplicity * product) % mask_sum == 0
    return ExistenceVerdict(passed, multiplicity, mask_sum, product)


def _witness_base(u: Tile, spectrum: DivisorSpectrum) -> IntPolynomial:
    # (x^P - 1) / ((x - 1) * divisor_product); exact because the mask sum is
    # nonzero, so x - 1 is not among the divisors.
    denom = IntPolynomial([-1, 1]) * spectrum.divisor_product()
    return poly_exact_div(power_minus_one(u.modulus), denom)


def construct_multitiling(u: Tile, multiplicity: int) -> MultitilingWitness:
    """Build an integer m-multitiling whenever the existence test passes.

    The witness tile has the constant polynomial R with
    R(1) = m * d(1) / masksum as its multiplier, where d is the product of
    the cyclotomic divisors of the mask.
    """
    verdict = multitiling_exists(u, multiplicity)
    if not verdict.passed:
        raise NotExists("no %d-multitiling exists for this tile" % multiplicity)
    spectrum = _spectrum_of(u)
    constant = multiplicity * spectrum.divisor_product_at_one() // verdict.mask_sum
    multiplier = IntPolynomial([constant])
    witness_poly = multiplier * _witness_base(u, spectrum)
    return MultitilingWitness(
        tile=tile_from_polynomial(witness_poly, u.modulus),
        multiplier=multiplier,
        multiplicity=multiplicity,
    )


def construct_tiling_prime_power(u: Tile, multiplicity: int) -> Tile:
    """Build a 0/1 m-tiling on a prime-power group.

    Requires 0 < m <= mask sum and a passing existence test. On a prime
    power, the product of the cyclotomic divisors has 0/1 coefficients;
    the multiplier is the sum of the lowest-degree m * d(1) / masksum
    monomials with coefficient 1, and the resulting tile is 0/1 again.
    """
    if not is_prime_power(u.modulus):
        raise NotPrimePower("group order %d is not a prime power" % u.modulus)
    mask_sum = eval_at(mask_polynomial(u), 1)
    if multiplicity <= 0 or multiplicity > mask_sum:
        raise MultiplicityOutOfRange(
            "need 0 < m <= %d, got m = %d" % (mask_sum, multiplicity)
        )
    verdict = multitiling_exists(u, multiplicity)
    if not verdict.passed:
        raise NotExists("no %d-multitiling exists for this tile" % multiplicity)
    spectrum = _spectrum_of(u)
    product = spectrum.divisor_product()
    count = multiplicity * eval_at(product, 1) // mask_sum
    ones = [e for e, cf in enumerate(product.coeffs) if cf == 1]
    if any(cf not in (0, 1) for cf in product.coeffs) or count > len(ones):
        raise AssertionError("divisor product is not 0/1 on a prime power")
    selected = ones[:count]
    coeffs = [0] * (selected[-1] + 1)
    for e in selected:
        coeffs[e] = 1
    multiplier = IntPolynomial(coeffs)
    witness_poly = multiplier * _witness_base(u, spectrum)
    tile = tile_from_polynomial(witness_poly, u.modulus)
    if any(value not in (0, 1) for value in tile.values):
        raise AssertionError("constructed witness is not a 0/1 tile")
    return tile
