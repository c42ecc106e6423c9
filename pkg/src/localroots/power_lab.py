"""Power maps on GL_n over local fields.

Decisions are driven by the characteristic polynomial (Newton polygons and
congruences); no eigenvalue is ever constructed in an extension field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

import sympy

from .arith import (
    INF,
    InsufficientPrecision,
    ceil_log,
    floor_log,
    divisors,
    lcm,
    prime_factors,
    rational_root,
    require_prime,
    totient,
    vp,
    vp_int,
)
from .laurent import LaurentScalar, _frobenius_chain, kth_root_scalar_charp
from .matrices import (
    LaurentField,
    LocalMatrix,
    PadicField,
    binomial_poly,
    QQ,
    char_poly,
    companion,
    det,
    is_nonderogatory,
    matrix_slopes,
    newton_polygon,
    padic_field,
    poly_eval,
    poly_eval_matrix,
    poly_mod_monic,
    poly_mul,
    power_map,
)
from .padic import PadicScalar, kth_root_scalar

# ---------------------------------------------------------------- data types


@dataclass(frozen=True)
class ExtensionProfile:
    residue_degree: int
    ramification: int


@dataclass(frozen=True)
class RootVerdict:
    status: str  # "yes" | "no" | "undecided"
    witness: LocalMatrix | None = None
    reason: str = ""
    precision: float = INF

    def __post_init__(self):
        if self.status not in ("yes", "no", "undecided"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "yes" and self.witness is None:
            raise ValueError("a positive verdict needs a witness")


@dataclass(frozen=True)
class AllOrdersVerdict:
    status: str  # "yes" | "no"
    certificate: dict = field(default_factory=dict)


@dataclass(frozen=True)
class TowerWitness:
    base: LocalMatrix
    q: int
    witnesses: tuple

    @property
    def depth(self) -> int:
        return len(self.witnesses)


@dataclass(frozen=True)
class CyclicClosure:
    generator: LocalMatrix
    order: int | str  # positive integer or "infinite"

    @property
    def is_finite(self) -> bool:
        return self.order != "infinite"


# ---------------------------------------------------------------- basic predicates


def _require_invertible(M: LocalMatrix):
    if M.field.is_zero(det(M)):
        raise ValueError("matrix is singular")


def _prime_for(M: LocalMatrix, p):
    if p is not None:
        return require_prime(p)
    if M.field.prime is None:
        raise ValueError("a prime is required for matrices over Q")
    return M.field.prime


def is_distal(M: LocalMatrix, p: int | None = None) -> bool:
    """All eigenvalues have valuation zero."""
    _require_invertible(M)
    poly = matrix_slopes(M, _prime_for(M, p))
    return all(s == 0 for s, _ in poly.segments)


def is_unipotent(M: LocalMatrix) -> bool:
    if M.field.kind == "rational":
        # (M - I)^n = 0, which is cheaper than the characteristic polynomial
        N = M - LocalMatrix.identity(M.field, M.n)
        return power_map(N, M.n).is_zero_matrix()
    f = char_poly(M)
    target = binomial_poly(M.n, M.field)
    return all(M.field.is_zero(a - b) for a, b in zip(f, target))


def _require_char0_unipotent(U: LocalMatrix):
    if U.field.characteristic != 0:
        raise ValueError("log/exp need characteristic 0")
    if not is_unipotent(U):
        raise ValueError("matrix is not unipotent")


def _nilpotent_series(X: LocalMatrix, coeff) -> LocalMatrix:
    """sum_{i>=0} coeff(i) X^i for nilpotent X (terms vanish past n-1), by Horner."""
    n, fld = X.n, X.field
    acc = LocalMatrix.scalar(fld, n, fld.coerce(coeff(n - 1)))
    for i in range(n - 2, -1, -1):
        acc = acc @ X
        c = coeff(i)
        if c:
            rows = [list(r) for r in acc.entries]
            for j in range(n):
                rows[j][j] = rows[j][j] + c
            acc = LocalMatrix.of(fld, rows)
    return acc


def unipotent_log(U: LocalMatrix) -> LocalMatrix:
    _require_char0_unipotent(U)
    N = U - LocalMatrix.identity(U.field, U.n)
    return _nilpotent_series(N, lambda i: Fraction((-1) ** (i + 1), i) if i else 0)


def nilpotent_exp(X: LocalMatrix) -> LocalMatrix:
    return _nilpotent_series(X, lambda i: Fraction(1, factorial(i)))


def unipotent_kth_root(U: LocalMatrix, k: int) -> LocalMatrix:
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    return nilpotent_exp(unipotent_log(U).scale(Fraction(1, k)))


def one_parameter_sample(U: LocalMatrix, t) -> LocalMatrix:
    return nilpotent_exp(unipotent_log(U).scale(Fraction(t)))


# ---------------------------------------------------------------- exponent bounds


def _rational_bound(n: int) -> int:
    # phi(m) >= sqrt(m/2), so phi(m) <= n forces m <= 2 n^2
    return lcm(*[m for m in range(1, 2 * n * n + 1) if totient(m) <= n])


def unipotent_power_bound(n: int, fld) -> tuple[int, list[ExtensionProfile]]:
    """R with M^R unipotent whenever some power of M is, plus the profiles used."""
    if n < 1:
        raise ValueError("n must be positive")
    if fld.kind == "rational":
        return _rational_bound(n), []
    if fld.kind == "padic":
        p = fld.prime
        R, profiles = 1, []
        s = 0
        while totient(p**s) <= n:
            e = totient(p**s)
            for f in range(1, n // e + 1):
                R = lcm(R, (p**f - 1) * p**s)
                profiles.append(ExtensionProfile(f, e))
            s += 1
        return R, profiles
    p, q = fld.profile.p, fld.profile.q
    R = lcm(*[q**f - 1 for f in range(1, n + 1)]) * p ** ceil_log(n, p)
    return R, [ExtensionProfile(f, 1) for f in range(1, n + 1)]


def torsion_exponent_bound(n: int, fld) -> int:
    """Every finite-order element of GL_n over the field has order dividing this."""
    return unipotent_power_bound(n, fld)[0]


def residue_exponent(n: int, fld) -> int:
    """lcm of |k^*| over residue extensions of degree <= n."""
    if fld.kind == "laurent":
        q = fld.profile.q
    else:
        q = fld.prime
    return lcm(*[q**f - 1 for f in range(1, n + 1)])


class _Fq:
    """Element of a small finite field, for fast polynomial work."""

    __slots__ = ("v", "F")

    def __init__(self, v, F):
        self.v = v
        self.F = F

    def __add__(self, o):
        return _Fq(self.F.add(self.v, o.v), self.F)

    def __sub__(self, o):
        return _Fq(self.F.sub(self.v, o.v), self.F)

    def __mul__(self, o):
        return _Fq(self.F.mul(self.v, o.v), self.F)

    def __neg__(self):
        return _Fq(self.F.neg(self.v), self.F)

    def __eq__(self, o):
        return isinstance(o, _Fq) and self.v == o.v

    def __hash__(self):
        return hash(self.v)


def _exponent_ring(M: LocalMatrix, f):
    """Coefficients of f in a ring suitable for the divisor search, or None
    when f certifies that no eigenvalue power is 1."""
    fld = M.field
    if fld.kind == "laurent":
        F = fld.profile.field
        out = []
        for c in f:
            if c.is_exact:
                if c.is_zero:
                    out.append(_Fq(0, F))
                elif c.valuation == 0 and len(c.coeffs) == 1:
                    out.append(_Fq(c.coeffs[0], F))
                else:
                    return None
            elif c.is_zero or (c.valuation == 0 and not any(c.coeffs[1:])):
                raise InsufficientPrecision("cannot confirm a constant coefficient")
            else:
                return None
        return out, _Fq(0, F), lambda x: x.v == 0
    # char 0: roots of unity have integral characteristic polynomial with unit constant term
    for c in f:
        if isinstance(c, PadicScalar):
            if not c.is_zero and c.valuation < 0:
                return None
        elif Fraction(c).denominator != 1:
            return None
    c0 = f[0]
    if isinstance(c0, PadicScalar):
        if c0.is_zero:
            raise InsufficientPrecision("constant term undetermined")
        if c0.valuation != 0:
            return None
    elif not _is_cyclotomic_product([int(c) for c in f]):
        return None
    return list(f), fld.zero(), fld.is_zero


@lru_cache(maxsize=None)
def _cyclotomic(m: int) -> tuple[int, ...]:
    x = sympy.Symbol("x")
    return tuple(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs()))


def _divmod_int_monic(f, g):
    f = list(f)
    dg = len(g) - 1
    q = [0] * max(len(f) - dg, 1)
    for deg in range(len(f) - 1, dg - 1, -1):
        c = f[deg]
        q[deg - dg] = c
        if c:
            for j in range(dg + 1):
                f[deg - dg + j] -= c * g[j]
    return q, f[:dg]


def _is_cyclotomic_product(f: list[int]) -> bool:
    """Monic integer f is a product of cyclotomic polynomials (trial division)."""
    n = len(f) - 1
    for m in range(1, 2 * n * n + 1):
        if totient(m) > n:
            continue
        phi = _cyclotomic(m)
        while len(f) >= len(phi):
            q, r = _divmod_int_monic(f, phi)
            if any(r):
                break
            f = q
        if len(f) == 1:
            return True
    return len(f) == 1


def _powmod_x(d, f, zero, one):
    result = [one]
    base = [zero, one]
    while d:
        if d & 1:
            result = poly_mod_monic(poly_mul(result, base, zero), f, zero)
        d >>= 1
        if d:
            base = poly_mod_monic(poly_mul(base, base, zero), f, zero)
    return poly_mod_monic(result, f, zero)


def unipotent_power_exponent(M: LocalMatrix) -> int | None:
    """Minimal r with M^r unipotent, or None when no power is unipotent."""
    _require_invertible(M)
    n = M.n
    f = char_poly(M)
    ring = _exponent_ring(M, f)
    if ring is None:
        return None
    coeffs, zero, is_zero = ring
    one = coeffs[-1]
    R, _ = unipotent_power_bound(n, M.field)

    # M^d unipotent  <=>  (x^d - 1)^n = 0 mod charpoly (all eigenvalues satisfy l^d = 1)
    def unipotent_at(d):
        g = _powmod_x(d, coeffs, zero, one)
        g[0] = g[0] - one
        acc = [one] + [zero] * (n - 1)
        for _ in range(n):
            acc = poly_mod_monic(poly_mul(acc, g, zero), coeffs, zero)
        return all(is_zero(c) for c in acc)

    if not unipotent_at(R):
        return None
    # valid exponents are the multiples of the minimal one, so strip primes greedily
    d = R
    for ell in prime_factors(R):
        while d % ell == 0 and unipotent_at(d // ell):
            d //= ell
    return d


# ---------------------------------------------------------------- congruences


def eigenvalue_congruence_check(M: LocalMatrix, r: int, k: int) -> bool:
    """All eigenvalues of M^r lie in 1 + p^(k+c) Z_p, c = 2 for p = 2 else 1."""
    if not isinstance(M.field, PadicField):
        raise ValueError("congruence check needs a p-adic matrix")
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    if not is_distal(M):
        raise ValueError("matrix is not distal")
    p = M.field.prime
    target = k + (2 if p == 2 else 1)
    P = char_poly(power_map(M, r))
    B = binomial_poly(M.n, M.field)
    for a, b in zip(P, B):
        d = a - b
        if isinstance(d, PadicScalar):
            if d.is_zero:
                if d.absprec < target:
                    raise InsufficientPrecision(f"coefficient known only mod p^{d.absprec}")
                continue
            if d.valuation < target:
                return False
        elif vp(d, p) < target:
            return False
    return True


# ---------------------------------------------------------------- towers and cyclic closures


def _matrices_match(A: LocalMatrix, B: LocalMatrix) -> bool:
    if A.is_exact() and B.is_exact():
        return A.equals(B)
    return A.agrees(B)


def build_unipotent_tower(U: LocalMatrix, q: int, depth: int) -> TowerWitness:
    xs, cur = [], U
    for _ in range(depth):
        cur = unipotent_kth_root(cur, q)
        xs.append(cur)
    return TowerWitness(U, q, tuple(xs))


def verify_tower(w: TowerWitness) -> bool:
    prev = w.base
    for x in w.witnesses:
        if x.n != prev.n or x.field != prev.field:
            return False
        if x.field.is_zero(det(x)):
            return False
        if not _matrices_match(power_map(x, w.q), prev):
            return False
        prev = x
    return True


def cyclic_closure(M: LocalMatrix) -> CyclicClosure:
    """Order of M: finite exactly when some power is unipotent of finite order."""
    d = unipotent_power_exponent(M)
    if d is None:
        return CyclicClosure(M, "infinite")
    P = power_map(M, d)
    I = LocalMatrix.identity(M.field, M.n)
    if M.field.characteristic == 0:
        return CyclicClosure(M, d if P.equals(I) else "infinite")
    p = M.field.characteristic
    order = d
    while not P.equals(I):
        P = power_map(P, p)
        order *= p
    return CyclicClosure(M, order)


def cyclic_root(H: CyclicClosure, q: int, k: int) -> LocalMatrix | None:
    """y in <g> with y^(q^k) = g, or None when q divides the order."""
    if not H.is_finite:
        raise ValueError("cyclic_root needs an element of finite order")
    require_prime(q)
    if k < 1:
        raise ValueError("k must be positive")
    d = H.order
    if d % q == 0:
        return None
    a = pow(q**k, -1, d) if d > 1 else 0
    return power_map(H.generator, a)


def cyclic_root_exponent(d: int, q: int, k: int) -> int | None:
    if d % q == 0:
        return None
    return pow(q**k, -1, d) if d > 1 else 0


# ---------------------------------------------------------------- k-th roots


def _scalar_root(fld, c, k):
    if fld.kind == "rational":
        return rational_root(Fraction(c), k)
    if fld.kind == "padic":
        if not isinstance(c, PadicScalar):
            r = rational_root(Fraction(c), k)
            if r is not None:
                return r
        return kth_root_scalar(fld.to_padic(c), k)
    return kth_root_scalar_charp(c, k)


def _binom_frac(a: Fraction, j: int) -> Fraction:
    out = Fraction(1)
    for i in range(j):
        out *= a - i
    return out / factorial(j)


def _series_mul(a, b, e, zero):
    out = [zero] * e
    for i, x in enumerate(a[:e]):
        for j, y in enumerate(b[: e - i]):
            out[i + j] = out[i + j] + x * y
    return out


def _local_root(fld, c, e: int, k: int):
    """Coefficients of h(y) with h^k = c + y mod y^e, or None if none exists."""
    h0 = _scalar_root(fld, c, k)
    if h0 is None:
        return None
    zero = fld.zero()
    if e == 1:
        return [h0]
    cinv = fld.one() / c
    if fld.characteristic == 0:
        w = [fld.one()]
        cp = fld.one()
        for j in range(1, e):
            cp = cp * cinv
            w.append(cp * _binom_frac(Fraction(1, k), j))
        return _series_mul([h0], w, e, zero)
    p = fld.characteristic
    a, m = _split(k, p)
    S = [fld.one()]
    cp = fld.one()
    for j in range(1, e):
        cp = cp * cinv
        S.append(cp * fld.from_rational(_binom_frac(Fraction(1, m), j)))
    step = p**a
    roots = []
    for j, s in enumerate(S):
        if j % step:
            if not fld.is_zero(s):
                return None
            continue
        if fld.is_zero(s):
            roots.append(zero)
            continue
        r = _frobenius_chain(s, a)
        if r is None:
            return None
        roots.append(r)
    w = [zero] * e
    for i, r in enumerate(roots):
        w[i] = r
    return _series_mul([h0], w, e, zero)


def _split(k, p):
    a = 0
    while k % p == 0:
        k //= p
        a += 1
    return a, k


def _taylor_shift(f, c, zero):
    """Coefficients of f(y + c)."""
    f = list(f)
    n = len(f)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            f[j] = f[j] + c * f[j + 1]
    return f


def _divide_linear(f, c, zero):
    """(f / (x - c)) for an exact root c."""
    out = [zero] * (len(f) - 1)
    acc = zero
    for i in range(len(f) - 1, 0, -1):
        acc = acc * c + f[i]
        out[i - 1] = acc
    return out


def _series_inverse(a, e, fld):
    inv0 = fld.one() / a[0]
    b = [inv0]
    for n in range(1, e):
        acc = fld.zero()
        for i in range(1, min(n, len(a) - 1) + 1):
            acc = acc + a[i] * b[n - i]
        b.append(-(acc * inv0))
    return b


def _linear_factors(M: LocalMatrix, f):
    """[(root, multiplicity)] when f splits into linear factors over the base
    field, else None.  Raises OutsideScope-style None for unsupported inputs."""
    fld = M.field
    if fld.kind in ("rational", "padic"):
        if any(isinstance(c, PadicScalar) for c in f):
            return None
        x = sympy.Symbol("x")
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f)], x)
        _, facs = poly.factor_list()
        out = []
        for g, mult in facs:
            if g.degree() == 1:
                a1, a0 = g.all_coeffs()
                r = -sympy.Rational(a0) / sympy.Rational(a1)
                out.append((Fraction(int(r.p), int(r.q)), mult))
                continue
            if fld.kind != "padic":
                return None
            roots = _hensel_roots([int(c) for c in reversed(g.all_coeffs())], fld)
            if roots is None:
                return None
            out.extend((r, mult) for r in roots)
        return out
    return _laurent_linear_factors(fld, f)


_HENSEL_PRIME_LIMIT = 10**4


def _hensel_roots(g: list[int], fld: PadicField):
    """All roots in Z_p of an integer polynomial (low->high), when they are
    simple modulo p and there are deg g of them; otherwise None."""
    p, prec = fld.prime, fld.profile.precision
    if g[-1] % p == 0 or p > _HENSEL_PRIME_LIMIT:
        return None
    dg = [i * c for i, c in enumerate(g)][1:]

    def ev(h, x, mod):
        acc = 0
        for c in reversed(h):
            acc = (acc * x + c) % mod
        return acc

    residues = [r for r in range(p) if ev(g, r, p) == 0]
    if len(residues) != len(g) - 1 or any(ev(dg, r, p) == 0 for r in residues):
        return None
    mod = p**prec
    out = []
    for r in residues:
        for _ in range(prec.bit_length() + 1):
            r = (r - ev(g, r, mod) * pow(ev(dg, r, mod), -1, mod)) % mod
        out.append(fld.to_padic(Fraction(r)))
    return out


_LAURENT_CANDIDATE_LIMIT = 4096


def _laurent_linear_factors(fld: LaurentField, f):
    if not all(c.is_exact for c in f):
        return None
    prof = fld.profile
    q = prof.q
    poly = newton_polygon(f)
    remaining = list(f)
    out = []
    total = 0
    for slope, _ in poly.segments:
        if slope == INF or slope.denominator != 1:
            return None
        span = max(len(c.coeffs) for c in f if not c.is_zero) - 1
        count = (q - 1) * q**span
        if count > _LAURENT_CANDIDATE_LIMIT:
            return None
        for lead in range(1, q):
            for tail in _digit_tuples(q, span):
                c = LaurentScalar.from_coeffs(prof, [lead, *tail], valuation=int(slope))
                mult = 0
                while len(remaining) > 1 and fld.is_zero(poly_eval(remaining, c, fld.zero())):
                    remaining = _divide_linear(remaining, c, fld.zero())
                    mult += 1
                if mult:
                    out.append((c, mult))
                    total += mult
    if total != len(f) - 1:
        return None
    return out


def _digit_tuples(q, length):
    if length == 0:
        yield ()
        return
    for head in range(q):
        for rest in _digit_tuples(q, length - 1):
            yield (head, *rest)


def _commutant_root(M: LocalMatrix, f, factors, k: int):
    """Polynomial g with g(M)^k = M built by CRT over the local algebras, or
    None when some local algebra has no k-th root of x."""
    fld = M.field
    zero = fld.zero()
    local = []
    for c, e in factors:
        h = _local_root(fld, c, e, k)
        if h is None:
            return None
        local.append(h)
    if len(factors) == 1:
        c, _ = factors[0]
        return _taylor_shift(local[0], -c, zero)
    g = [zero] * (len(f) - 1)
    for (c, e), h in zip(factors, local):
        F = list(f)
        for _ in range(e):
            F = _divide_linear(F, c, zero)
        shifted = _taylor_shift(F, c, zero)
        inv = _series_inverse(shifted, e, fld)
        u = _series_mul(h, inv, e, zero)
        u_x = _taylor_shift(u, -c, zero)
        term = poly_mod_monic(poly_mul(u_x, F, zero), list(f), zero)
        g = [a + b for a, b in zip(g, term)]
    return g


def has_kth_root(M: LocalMatrix, k: int) -> RootVerdict:
    """Decide whether M = W^k for some W in GL_n over the base field."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer")
    _require_invertible(M)
    try:
        return _has_kth_root(M, k)
    except InsufficientPrecision as exc:
        return RootVerdict("undecided", reason=f"insufficient precision: {exc}")


def _verified(M, W, k, reason):
    if not _matrices_match(power_map(W, k), M):
        return RootVerdict("undecided", reason="witness failed verification")
    return RootVerdict("yes", W, reason, min(W.min_precision(), M.min_precision()))


def _has_kth_root(M: LocalMatrix, k: int) -> RootVerdict:
    fld = M.field
    if k == 1:
        return RootVerdict("yes", M, "trivial")
    if fld.characteristic == 0 and is_unipotent(M):
        return _verified(M, unipotent_kth_root(M, k), k, "unipotent")
    c = M.is_scalar()
    if c is not None:
        r = _scalar_root(fld, c, k)
        if r is not None:
            return _verified(M, LocalMatrix.scalar(fld, M.n, r), k, "scalar")
        if M.n == 1:
            return RootVerdict("no", reason="scalar has no k-th root")
    if not is_nonderogatory(M):
        return RootVerdict("undecided", reason="outside decision scope: derogatory matrix")
    f = char_poly(M)
    factors = _linear_factors(M, f)
    if factors is None:
        return RootVerdict(
            "undecided", reason="outside decision scope: characteristic polynomial does not split"
        )
    g = _commutant_root(M, f, factors, k)
    if g is None:
        return RootVerdict("no", reason="no k-th root in the commutant algebra")
    return _verified(M, poly_eval_matrix(g, M), k, "commutant")


# ---------------------------------------------------------------- roots of all orders


def _slopes_prime(M: LocalMatrix) -> int:
    return 2 if M.field.kind == "rational" else M.field.prime


def roots_all_orders(M: LocalMatrix) -> AllOrdersVerdict:
    """Does M have k-th roots for every k?  Negative answers name a blocked k."""
    _require_invertible(M)
    fld = M.field
    n = M.n
    I = LocalMatrix.identity(fld, n)
    if fld.characteristic == 0:
        if is_unipotent(M):
            return AllOrdersVerdict("yes", {"kind": "one_parameter", "log": unipotent_log(M)})
    elif M.equals(I):
        return AllOrdersVerdict("yes", {"kind": "identity"})

    # torsion: the finite-order part has order d > 1
    if fld.characteristic == 0:
        d = unipotent_power_exponent(M)
    else:
        H = cyclic_closure(M)
        d = H.order if H.is_finite else None
    if d is not None and d > 1:
        q = prime_factors(d)[0]
        T = torsion_exponent_bound(n, fld)
        j = vp_int(T, q) - vp_int(d, q) + 1
        return AllOrdersVerdict(
            "no", {"kind": "torsion", "order": d, "q": q, "bound": T, "k": q**j}
        )

    p = _slopes_prime(M)
    poly = matrix_slopes(M, p)
    for s, _ in poly.segments:
        if s != 0:
            j = vp_int(s.numerator, p) + floor_log(n, p) + 1
            return AllOrdersVerdict("no", {"kind": "valuation", "p": p, "slope": s, "k": p**j})

    r = residue_exponent(n, fld if fld.kind != "rational" else padic_field(p))
    slopes = _congruence_slopes(M, r, p)
    s = min(slopes)
    if fld.characteristic == 0:
        j = (n * s).numerator // (n * s).denominator
    else:
        j = 0
        while p**j <= n * s:
            j += 1
    return AllOrdersVerdict("no", {"kind": "congruence", "p": p, "r": r, "slope": s, "k": p**j})


def _strip_cyclotomic(f: list) -> list:
    """f with every cyclotomic factor divided out (rational coefficients)."""
    n = len(f) - 1
    for m in range(1, 2 * n * n + 1):
        if totient(m) > n:
            continue
        phi = _cyclotomic(m)
        while len(f) >= len(phi):
            q, r = _divmod_int_monic(f, phi)
            if any(r):
                break
            f = q
    return f


def _congruence_slopes(M: LocalMatrix, r: int, p: int) -> list:
    """Finite root valuations of charpoly(M^r - I), restricted to eigenvalues
    that are not roots of unity.

    In characteristic 0 the work happens in Q_p on the companion matrix of
    the non-cyclotomic part, so a large r never inflates rational heights.
    """
    f = char_poly(M)
    if M.field.characteristic != 0:
        D = power_map(M, r) - LocalMatrix.identity(M.field, M.n)
        return [s for s, _ in newton_polygon(char_poly(D), p).segments if s != INF]
    if any(isinstance(c, PadicScalar) for c in f):
        base, exact = M, False
    else:
        g = _strip_cyclotomic(list(f))
        base, exact = companion(QQ, g), True
    prec = 64
    while True:
        fld = padic_field(p, prec)
        Mp = LocalMatrix.of(fld, [[fld.to_padic(x) for x in row] for row in base.entries])
        D = power_map(Mp, r) - LocalMatrix.identity(fld, base.n)
        try:
            poly = newton_polygon(char_poly(D), p)
            return [s for s, _ in poly.segments if s != INF]
        except InsufficientPrecision:
            if not exact or prec >= 4096:
                raise
            prec *= 2


__all__ = [
    "AllOrdersVerdict",
    "CyclicClosure",
    "ExtensionProfile",
    "RootVerdict",
    "TowerWitness",
    "build_unipotent_tower",
    "cyclic_closure",
    "cyclic_root",
    "eigenvalue_congruence_check",
    "has_kth_root",
    "is_distal",
    "is_unipotent",
    "one_parameter_sample",
    "roots_all_orders",
    "torsion_exponent_bound",
    "unipotent_kth_root",
    "unipotent_log",
    "unipotent_power_bound",
    "unipotent_power_exponent",
    "verify_tower",
]

