"""Small finite fields F_q = F_p[x]/(f) with table-driven arithmetic.

Elements are integers 0 <= e < q whose base-p digits are the coefficients of
the representing polynomial (lowest degree first).
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

import numpy as np

from . import _kernels
from .arith import prime_factors, require_prime

MAX_FIELD_SIZE = 1024


def _poly_mulmod(a, b, modulus, p):
    """Multiply digit lists a, b and reduce by the monic ``modulus``."""
    s = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, s - 1, -1):
        c = prod[deg]
        if c:
            for j in range(s + 1):
                prod[deg - s + j] = (prod[deg - s + j] - c * modulus[j]) % p
    out = prod[:s] + [0] * max(0, s - len(prod))
    return out[:s]


def _poly_divides(f, g, p):
    """True when the monic polynomial f divides g over F_p (digit lists)."""
    g = list(g)
    df = len(f) - 1
    for deg in range(len(g) - 1, df - 1, -1):
        c = g[deg]
        if c:
            for j in range(df + 1):
                g[deg - df + j] = (g[deg - df + j] - c * f[j]) % p
    return not any(g[:df])


def is_irreducible(modulus, p) -> bool:
    """Exhaustive search for a monic factor of degree <= deg/2."""
    s = len(modulus) - 1
    if s < 1 or modulus[-1] % p != 1:
        return False
    if s == 1:
        return True
    for d in range(1, s // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if _poly_divides(list(low) + [1], modulus, p):
                return False
    return True


def first_irreducible(p: int, s: int) -> tuple[int, ...]:
    """Lexicographically first monic irreducible polynomial of degree s."""
    if s == 1:
        return (0, 1)
    for low in itertools.product(range(p), repeat=s):
        cand = tuple(reversed(low)) + (1,)
        if cand[0] and is_irreducible(cand, p):
            return cand
    raise ValueError("no irreducible polynomial found")  # pragma: no cover


class FiniteField:
    def __init__(self, p: int, modulus):
        require_prime(p)
        modulus = tuple(int(c) % p for c in modulus)
        if not is_irreducible(modulus, p):
            raise ValueError(f"{modulus} is not a monic irreducible polynomial mod {p}")
        self.p = p
        self.s = len(modulus) - 1
        self.q = p**self.s
        if self.q > MAX_FIELD_SIZE:
            raise ValueError(f"field size {self.q} exceeds {MAX_FIELD_SIZE}")
        self.modulus = modulus
        self.tables = self._build_tables()

    def digits(self, e: int) -> list[int]:
        return [(e // self.p**j) % self.p for j in range(self.s)]

    def encode(self, digits) -> int:
        digits = list(digits)
        if len(digits) > self.s:
            raise ValueError("too many digits for this field")
        return sum((int(d) % self.p) * self.p**j for j, d in enumerate(digits))

    def _build_tables(self):
        p, s, q = self.p, self.s, self.q
        # discrete log tables from a generator of the cyclic group F_q^*
        gen_exp = None
        for g in range(1, q):
            seq = [1]
            gd = self.digits(g)
            cur = [1] + [0] * (s - 1)
            for _ in range(q - 2):
                cur = _poly_mulmod(cur, gd, self.modulus, p)
                e = self.encode(cur)
                if e == 1:
                    break
                seq.append(e)
            if len(seq) == q - 1:
                gen_exp = seq
                break
        exp = np.array(gen_exp, dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        log[exp] = np.arange(q - 1)
        idx = np.arange(q, dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        nz = idx[1:]
        mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (q - 1)]
        dig = np.stack([(idx // p**j) % p for j in range(s)], axis=1)
        weights = p ** np.arange(s, dtype=np.int64)
        add = ((dig[:, None, :] + dig[None, :, :]) % p) @ weights
        neg = ((-dig) % p) @ weights
        inv = np.zeros(q, dtype=np.int64)
        inv[nz] = exp[(-log[nz]) % (q - 1)]
        self.generator_powers = exp
        self.log_table = log
        return _kernels.FieldTables(p, s, add, mul, neg, inv)

    # scalar helpers on encoded elements
    def add(self, a, b):
        return int(self.tables.add[a, b])

    def sub(self, a, b):
        return int(self.tables.add[a, self.tables.neg[b]])

    def mul(self, a, b):
        return int(self.tables.mul[a, b])

    def neg(self, a):
        return int(self.tables.neg[a])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_q")
        return int(self.tables.inv[a])

    def pow(self, a, k):
        if a == 0:
            if k < 0:
                raise ZeroDivisionError("inverse of zero in F_q")
            return 0 if k else 1
        return int(self.generator_powers[(int(self.log_table[a]) * k) % (self.q - 1)])

    def from_int(self, n: int) -> int:
        return n % self.p

    def is_mth_power(self, a, m) -> bool:
        if a == 0:
            return True
        return self.pow(a, (self.q - 1) // math.gcd(m, self.q - 1)) == 1

    def root(self, a, m):
        """Some y with y**m == a, by exhaustion over F_q; None if absent."""
        if a == 0:
            return 0
        for y in range(1, self.q):
            if self.pow(y, m) == a:
                return y
        return None

    def frobenius_root(self, a):
        """Unique b with b**p == a (F_q is perfect)."""
        return self.pow(a, self.q // self.p) if a else 0

    def order(self, a) -> int:
        n = self.q - 1
        order = n
        for r in prime_factors(n) if n > 1 else []:
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order


@lru_cache(maxsize=None)
def get_field(p: int, modulus: tuple[int, ...]) -> FiniteField:
    return FiniteField(p, modulus)
