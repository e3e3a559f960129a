"""Multitiling verification, existence, and the two constructions."""

import itertools
import random

import pytest

from cyclotile.cyclotomic import divisor_spectrum
from cyclotile.errors import (
    ModulusMismatch,
    MultiplicityOutOfRange,
    NotExists,
    NotPrimePower,
)
from cyclotile.oracle import search_tilings
from cyclotile.polyring import all_ones, eval_at, poly_mul, reduce_mod_cyclic
from cyclotile.tiling import (
    MultitilingWitness,
    Tile,
    construct_multitiling,
    construct_tiling_prime_power,
    mask_polynomial,
    multitiling_exists,
    tile_from_polynomial,
    verify_multitiling,
)


def test_tile_basic():
    t = Tile((1, 0, 2))
    assert t.modulus == 3
    assert t.values == (1, 0, 2)
    with pytest.raises(ValueError):
        Tile(())


def test_mask_polynomial():
    assert mask_polynomial(Tile((1, 0, 1, 0))).coeffs == (1, 0, 1)
    assert mask_polynomial(Tile((2, 0, 0))).coeffs == (2,)
    assert mask_polynomial(Tile((0, 1, 0, 0, 1))).coeffs == (0, 1, 0, 0, 1)


def test_mask_roundtrip():
    rng = random.Random(11)
    for _ in range(100):
        p = rng.randrange(1, 10)
        t = Tile(tuple(rng.randrange(-3, 4) for _ in range(p)))
        assert tile_from_polynomial(mask_polynomial(t), p).values == t.values


def test_verify_examples():
    u = Tile((1, 0, 1, 0))
    assert verify_multitiling(u, Tile((1, 1, 0, 0)), 1)
    assert verify_multitiling(u, Tile((1, 1, 1, 1)), 2)
    assert not verify_multitiling(u, Tile((1, 1, 1, 1)), 1)


def test_verify_modulus_mismatch():
    with pytest.raises(ModulusMismatch):
        verify_multitiling(Tile((1, 0)), Tile((1, 0, 0)), 1)


def test_exists_examples():
    verdict = multitiling_exists(Tile((1, 0, 1, 0)), 1)
    assert verdict.passed
    assert verdict.mask_sum == 2
    assert verdict.prime_power_product == 2

    # coefficient sum zero can never tile
    for m in (1, 2, -3, 7):
        assert not multitiling_exists(Tile((1, -1, 0, 0)), m).passed

    assert multitiling_exists(Tile((1, 0, 0)), 5).passed


def test_exists_rejects_m_zero():
    with pytest.raises(ValueError):
        multitiling_exists(Tile((1, 0, 1, 0)), 0)


def test_exists_negative_m():
    # negative multiplicity is allowed by the divisibility test
    assert multitiling_exists(Tile((1, 0, 1, 0)), -1).passed
    w = construct_multitiling(Tile((1, 0, 1, 0)), -1)
    assert verify_multitiling(Tile((1, 0, 1, 0)), w.tile, -1)


def test_construct_multitiling_examples():
    w = construct_multitiling(Tile((1, 0, 0)), 3)
    assert w.tile.values == (3, 3, 3)

    w = construct_multitiling(Tile((1, 0, 1, 0)), 1)
    assert w.tile.values == (1, 1, 0, 0)
    assert w.multiplier.coeffs == (1,)

    w = construct_multitiling(Tile((1, 0, 1, 0)), 2)
    assert w.tile.values == (2, 2, 0, 0)
    assert w.multiplier.coeffs == (2,)


def test_construct_multitiling_not_exists():
    with pytest.raises(NotExists):
        construct_multitiling(Tile((1, -1, 0, 0)), 4)
    # sum 3 does not divide 1 * 1, and no cyclotomic factor helps
    with pytest.raises(NotExists):
        construct_multitiling(Tile((1, 1, 1, 0)), 1)


def test_witness_multiplier_identity():
    # the multiplier evaluated at 1 equals m * d(1) / masksum
    rng = random.Random(12)
    seen = 0
    while seen < 50:
        p = rng.randrange(2, 13)
        u = Tile(tuple(rng.randrange(0, 3) for _ in range(p)))
        m = rng.choice([1, 2, 3, 6, -2])
        if not multitiling_exists(u, m).passed:
            continue
        w = construct_multitiling(u, m)
        assert isinstance(w, MultitilingWitness)
        assert verify_multitiling(u, w.tile, m)
        mask_sum = eval_at(mask_polynomial(u), 1)
        spectrum = divisor_spectrum(mask_polynomial(u), p)
        d_at_one = eval_at(spectrum.divisor_product(), 1)
        assert eval_at(w.multiplier, 1) * mask_sum == m * d_at_one
        seen += 1


def test_prime_power_construction_examples():
    u = Tile((1, 0, 1, 0))
    assert construct_tiling_prime_power(u, 1).values == (1, 1, 0, 0)
    assert construct_tiling_prime_power(u, 2).values == (1, 1, 1, 1)
    with pytest.raises(MultiplicityOutOfRange):
        construct_tiling_prime_power(u, 3)


def test_prime_power_construction_rejects():
    with pytest.raises(NotPrimePower):
        construct_tiling_prime_power(Tile((1, 0, 1, 0, 0, 0)), 1)
    with pytest.raises(MultiplicityOutOfRange):
        construct_tiling_prime_power(Tile((1, 0, 1, 0)), 0)
    with pytest.raises(MultiplicityOutOfRange):
        construct_tiling_prime_power(Tile((1, 0, 1, 0)), -1)
    with pytest.raises(NotExists):
        construct_tiling_prime_power(Tile((1, 1, 1, 0)), 1)


def test_prime_power_outputs_are_zero_one():
    rng = random.Random(13)
    for p in (2, 3, 4, 5, 7, 8, 9, 16):
        for _ in range(40):
            u = Tile(tuple(rng.randrange(0, 3) for _ in range(p)))
            mask_sum = sum(u.values)
            if mask_sum == 0:
                continue
            for m in range(1, mask_sum + 1):
                if not multitiling_exists(u, m).passed:
                    continue
                v = construct_tiling_prime_power(u, m)
                assert set(v.values) <= {0, 1}
                assert verify_multitiling(u, v, m)


def _realized_multiplicities(u_values):
    """Constants achievable by convolving u with a 0/1 tile, by full enumeration."""
    p = len(u_values)
    support = [(h, u_values[h]) for h in range(p) if u_values[h]]
    out = set()
    for mask in range(1 << p):
        base = None
        constant = True
        for g in range(p):
            acc = 0
            for h, uv in support:
                if (mask >> ((g - h) % p)) & 1:
                    acc += uv
            if base is None:
                base = acc
            elif acc != base:
                constant = False
                break
        if constant:
            out.add(base)
    return out


def test_realized_multiplicities_matches_search_tilings():
    rng = random.Random(14)
    for _ in range(30):
        p = rng.randrange(2, 5)
        u = Tile(tuple(rng.randrange(0, 3) for _ in range(p)))
        realized = _realized_multiplicities(u.values)
        for m in range(1, 7):
            assert (m in realized) == bool(search_tilings(u, m))


def test_zero_one_completeness_on_prime_powers():
    # an m-tiling exists exactly when the constructor delivers one
    for p in (2, 3, 4, 5, 8, 9):
        for values in itertools.product(range(3), repeat=p):
            mask_sum = sum(values)
            if mask_sum == 0 or mask_sum > 6:
                continue
            u = Tile(values)
            realized = _realized_multiplicities(values)
            for m in range(1, mask_sum + 1):
                try:
                    v = construct_tiling_prime_power(u, m)
                except (NotExists, MultiplicityOutOfRange):
                    assert m not in realized, (values, m)
                else:
                    assert set(v.values) <= {0, 1}
                    assert verify_multitiling(u, v, m)
                    assert m in realized, (values, m)


def test_equation_equivalence_random():
    # convolution identity agrees with the polynomial congruence
    rng = random.Random(15)
    for _ in range(1000):
        p = rng.randrange(1, 21)
        u = Tile(tuple(rng.randrange(-3, 4) for _ in range(p)))
        v = Tile(tuple(rng.randrange(-3, 4) for _ in range(p)))
        m = rng.randrange(-6, 7)
        direct = verify_multitiling(u, v, m)
        product = poly_mul(mask_polynomial(u), mask_polynomial(v))
        residue = reduce_mod_cyclic(product - m * all_ones(p), p)
        assert direct == residue.is_zero()
