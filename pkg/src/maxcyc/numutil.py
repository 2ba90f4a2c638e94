"""Small number-theory helpers, trial-division scale."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out: list[int] = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def prime_power_base(n: int) -> int | None:
    """The prime p with n = p**k (k >= 1), or None when n is not a prime power."""
    ps = prime_factors(n)
    return ps[0] if len(ps) == 1 else None


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def multiplicative_order(a: int, modulus: int) -> int:
    """Least k >= 1 with a**k = 1 modulo `modulus`; a must be a unit."""
    if math.gcd(a, modulus) != 1:
        raise ValueError(f"{a} is not a unit modulo {modulus}")
    k = 1
    x = a % modulus
    while x != 1 % modulus:
        x = x * a % modulus
        k += 1
    return k
