"""Integer and rational helpers shared by the scalar and matrix modules."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce

from sympy import factorint, isprime

INF = math.inf


class InsufficientPrecision(ArithmeticError):
    """A decision depends on digits that are not known at the working precision."""


class OutsideScope(ValueError):
    """The input is well formed but the requested decision is not supported."""


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


def require_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")
    return p


def vp_int(n: int, p: int) -> float | int:
    """Exponent of p in the integer n (+inf for n == 0)."""
    if n == 0:
        return INF
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp(x, p: int):
    """p-adic valuation of an int or Fraction."""
    x = Fraction(x)
    if x == 0:
        return INF
    return vp_int(x.numerator, p) - vp_int(x.denominator, p)


def split_prime_power(k: int, p: int) -> tuple[int, int]:
    """Write k = p**a * m with m prime to p; return (a, m)."""
    a = 0
    while k % p == 0:
        k //= p
        a += 1
    return a, k


def lcm(*values: int) -> int:
    return reduce(math.lcm, values, 1)


def divisors(n: int) -> list[int]:
    """Positive divisors of n in increasing order."""
    divs = [1]
    for q, e in factorint(n).items():
        divs = [d * q**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def prime_factors(n: int) -> list[int]:
    return sorted(factorint(n))


def multiplicative_order(a: int, m: int) -> int:
    """Order of a in (Z/m)^*; requires gcd(a, m) == 1."""
    if m == 1:
        return 1
    if math.gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    phi = totient(m)
    order = phi
    for q in prime_factors(phi):
        while order % q == 0 and pow(a, order // q, m) == 1:
            order //= q
    return order


def totient(n: int) -> int:
    result = n
    for q in prime_factors(n):
        result -= result // q
    return result


def ceil_log(n: int, p: int) -> int:
    """Smallest e >= 0 with p**e >= n."""
    e, power = 0, 1
    while power < n:
        power *= p
        e += 1
    return e


def floor_log(n: int, p: int) -> int:
    """Largest e >= 0 with p**e <= n (n >= 1)."""
    e, power = 0, p
    while power <= n:
        power *= p
        e += 1
    return e


def integer_root(n: int, k: int) -> int | None:
    """Exact k-th root of a nonnegative integer, or None."""
    if n < 0:
        raise ValueError("negative radicand")
    if n < 2:
        return n
    r = round(n ** (1.0 / k)) if n.bit_length() < 1000 else _newton_iroot(n, k)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    r = _newton_iroot(n, k)
    return r if r**k == n else None


def _newton_iroot(n: int, k: int) -> int:
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def rational_root(x: Fraction, k: int) -> Fraction | None:
    """Exact k-th root of a rational number in Q, or None."""
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    sign = 1
    if x < 0:
        if k % 2 == 0:
            return None
        sign = -1
    num = integer_root(abs(x.numerator), k)
    den = integer_root(x.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(sign * num, den)


def first_primes(count: int) -> list[int]:
    out, n = [], 2
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n += 1
    return out
