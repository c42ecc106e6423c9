"""Random builders and brute-force oracles shared by the tests.

The oracles deliberately avoid the package's own number theory: they power
things out by hand and compare.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from localroots.laurent import LaurentScalar
from localroots.matrices import QQ, LocalMatrix, companion, det


# ---------------------------------------------------------------- builders


def rand_fraction(rng: random.Random, span=5, den=4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def elementary_conjugator(rng: random.Random, n: int, fld=QQ, entry=None, steps=None):
    """(C, C^-1) as products of elementary matrices, so both are exact."""
    entry = entry or (lambda: rand_fraction(rng))
    C = LocalMatrix.identity(fld, n)
    Cinv = LocalMatrix.identity(fld, n)
    if n == 1:
        return C, Cinv
    for _ in range(steps or 2 * n):
        i, j = rng.sample(range(n), 2)
        a = entry()
        E = _elementary(fld, n, i, j, a)
        Einv = _elementary(fld, n, i, j, -a)
        C = C @ E
        Cinv = Einv @ Cinv
    return C, Cinv


def _elementary(fld, n, i, j, a):
    rows = [[fld.one() if r == c else fld.zero() for c in range(n)] for r in range(n)]
    rows[i][j] = a
    return LocalMatrix.of(fld, rows)


def block_diag(fld, blocks) -> LocalMatrix:
    n = sum(b.n for b in blocks)
    rows = [[fld.zero()] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i in range(b.n):
            for j in range(b.n):
                rows[off + i][off + j] = b.entries[i][j]
        off += b.n
    return LocalMatrix.of(fld, rows)


def jordan_block(fld, n, eigenvalue=1) -> LocalMatrix:
    rows = [[fld.zero()] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = fld.coerce(eigenvalue)
        if i + 1 < n:
            rows[i][i + 1] = fld.one()
    return LocalMatrix.of(fld, rows)


def random_unipotent(rng: random.Random, n: int, fld=QQ) -> LocalMatrix:
    """Conjugated Jordan form with eigenvalue 1 and a random partition of n."""
    sizes, left = [], n
    while left:
        s = rng.randint(1, left)
        sizes.append(s)
        left -= s
    J = block_diag(fld, [jordan_block(fld, s) for s in sizes])
    C, Cinv = elementary_conjugator(rng, n, fld)
    return C @ J @ Cinv


def random_rational_matrix(rng: random.Random, n: int) -> LocalMatrix:
    """Invertible rational matrix drawn from a few qualitatively different families."""
    kind = rng.choice(["unipotent", "torsion", "generic", "mixed"])
    if kind == "unipotent":
        return random_unipotent(rng, n)
    C, Cinv = elementary_conjugator(rng, n)
    if kind == "torsion":
        blocks, left = [], n
        while left:
            choices = [c for c in TORSION_COMPANIONS if len(c) - 1 <= left]
            poly = rng.choice(choices)
            blocks.append(companion_q(poly))
            left -= len(poly) - 1
        return C @ block_diag(QQ, blocks) @ Cinv
    if kind == "mixed":
        blocks = [jordan_block(QQ, 1, rng.choice([2, 3, Fraction(1, 2), -1, 6]))]
        if n > 1:
            blocks.append(random_unipotent(rng, n - 1))
        return C @ block_diag(QQ, blocks) @ Cinv
    while True:
        M = LocalMatrix.of(QQ, [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
        if det(M) != 0:
            return M


# cyclotomic polynomials of degree <= 2, lowest degree first
TORSION_COMPANIONS = [(-1, 1), (1, 1), (1, 1, 1), (1, 0, 1), (1, -1, 1)]


def companion_q(coeffs) -> LocalMatrix:
    return companion(QQ, [Fraction(c) for c in coeffs])


def laurent_poly(profile, rng: random.Random, low=-1, high=2) -> LaurentScalar:
    q = profile.q
    coeffs = [rng.randrange(q) for _ in range(high - low + 1)]
    return LaurentScalar.from_coeffs(profile, coeffs, valuation=low)


# ---------------------------------------------------------------- oracles


def unit_kth_powers(p: int, digits: int, k: int) -> set[int]:
    mod = p**digits
    return {pow(y, k, mod) for y in range(mod) if y % p}


def brute_order(a: int, m: int) -> int:
    x, e = a % m, 1
    while x != 1 % m:
        x = x * a % m
        e += 1
    return e


def brute_phi(n: int) -> int:
    return sum(1 for j in range(1, n + 1) if gcd(j, n) == 1)


def cyclotomic_degree_oracle(m: int, p: int) -> int:
    """[Q_p(zeta_m) : Q_p] via m = p^s m' -> ord_{m'}(p) * phi(p^s), brute forced."""
    s, mp = 0, m
    while mp % p == 0:
        mp //= p
        s += 1
    f = brute_order(p, mp) if mp > 1 else 1
    return f * brute_phi(p**s)


def padic_bound_oracle(n: int, p: int) -> int:
    """lcm{m : deg_p(zeta_m) <= n}, enumerating every m up to p^(2n+1)."""
    out = 1
    for m in range(1, p ** (2 * n + 1) + 1):
        if cyclotomic_degree_oracle(m, p) <= n:
            out = out * m // gcd(out, m)
    return out


def matrix_order(M: LocalMatrix, limit: int) -> int | None:
    """Smallest j <= limit with M^j equal to I (at the precision carried)."""
    I = LocalMatrix.identity(M.field, M.n)
    P = M
    for j in range(1, limit + 1):
        if P.agrees(I):
            return j
        P = P @ M
    return None
