"""Small exact integer helpers: divisors, factorization, prime powers, CRT."""

from __future__ import annotations


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending primes."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def is_prime_power(n: int) -> bool:
    """True when n = p^e for a prime p and e >= 1. Note 1 is not a prime power."""
    return n >= 2 and len(factorize(n)) == 1


def prime_power_base(n: int) -> int:
    """The prime p with n = p^e, for prime-power n."""
    fac = factorize(n)
    if n < 2 or len(fac) != 1:
        raise ValueError("%d is not a prime power" % n)
    return fac[0][0]


def crt(residues: list[int], moduli: list[int]) -> int:
    """Minimal nonnegative solution of x = r_i (mod m_i) for pairwise coprime m_i."""
    x, modulus = 0, 1
    for r, m in zip(residues, moduli):
        t = ((r - x) * pow(modulus, -1, m)) % m
        x += modulus * t
        modulus *= m
    return x % modulus
