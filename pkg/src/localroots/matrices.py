"""Square matrices over Q, Q_p and F_q((t)), with characteristic polynomials
and Newton polygons.

Polynomials are tuples of coefficients, lowest degree first.  Matrices over
Q_p may mix exact rationals (``Fraction``) with ``PadicScalar`` entries; the
rational ones stay exact through every operation that does not need them to
interact with a p-adic approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import INF, InsufficientPrecision, require_prime, vp
from .laurent import LaurentProfile, LaurentScalar
from .padic import FieldProfile, PadicScalar

# ---------------------------------------------------------------- fields


class RationalField:
    kind = "rational"
    characteristic = 0
    prime = None

    def coerce(self, x):
        if type(x) is Fraction:
            return x
        if isinstance(x, (PadicScalar, LaurentScalar)):
            raise TypeError("rational field entries must be rationals")
        return Fraction(x)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def is_exact(self, x):
        return True

    def is_zero(self, x):
        return x == 0

    def valuation(self, x, p=None):
        if p is None:
            raise ValueError("a prime is needed to take valuations over Q")
        return vp(x, p)

    def from_rational(self, a):
        return Fraction(a)

    def describe(self):
        return {"kind": "rational"}

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class PadicField:
    profile: FieldProfile
    kind = "padic"
    characteristic = 0

    @property
    def prime(self):
        return self.profile.p

    def coerce(self, x):
        if isinstance(x, PadicScalar):
            if x.profile != self.profile:
                raise ValueError("p-adic profile mismatch")
            return x
        if isinstance(x, LaurentScalar):
            raise TypeError("Laurent entry in a p-adic matrix")
        return Fraction(x)

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def is_exact(self, x):
        return not isinstance(x, PadicScalar)

    def is_zero(self, x):
        """Zero test that refuses to guess on a p-adic zero of finite precision."""
        if isinstance(x, PadicScalar):
            if x.is_exact_zero:
                return True
            if x.is_zero:
                raise InsufficientPrecision(f"value is O(p^{x.absprec}); cannot decide if it is zero")
            return False
        return x == 0

    def valuation(self, x, p=None):
        if isinstance(x, PadicScalar):
            return x.valuation
        return vp(x, self.profile.p)

    def from_rational(self, a):
        return Fraction(a)

    def to_padic(self, x) -> PadicScalar:
        if isinstance(x, PadicScalar):
            return x
        return PadicScalar.from_rational(x, self.profile)

    def describe(self):
        return {"kind": "padic", "p": self.profile.p, "precision": self.profile.precision}

    def __repr__(self):
        return f"Q_{self.profile.p}"


@dataclass(frozen=True)
class LaurentField:
    profile: LaurentProfile
    kind = "laurent"

    @property
    def characteristic(self):
        return self.profile.p

    @property
    def prime(self):
        return self.profile.p

    def coerce(self, x):
        if isinstance(x, LaurentScalar):
            if x.profile != self.profile:
                raise ValueError("Laurent profile mismatch")
            return x
        if isinstance(x, int):
            return LaurentScalar.from_int(self.profile, x)
        if isinstance(x, Fraction):
            return self.from_rational(x)
        raise TypeError(f"cannot coerce {x!r} into F_q((t))")

    def zero(self):
        return LaurentScalar.zero(self.profile)

    def one(self):
        return LaurentScalar.from_int(self.profile, 1)

    def is_exact(self, x):
        return x.is_exact

    def is_zero(self, x):
        if x.is_exact_zero:
            return True
        if x.is_zero:
            raise InsufficientPrecision(f"value is O(t^{x.absprec}); cannot decide if it is zero")
        return False

    def valuation(self, x, p=None):
        return x.valuation

    def from_rational(self, a):
        a = Fraction(a)
        p = self.profile.p
        if a.denominator % p == 0:
            raise ZeroDivisionError(f"{a} has no image in characteristic {p}")
        return LaurentScalar.from_int(self.profile, a.numerator * pow(a.denominator, -1, p))

    def describe(self):
        pr = self.profile
        return {
            "kind": "laurent",
            "p": pr.p,
            "s": pr.s,
            "modulus": list(pr.irreducible_poly),
            "precision": pr.precision,
        }

    def __repr__(self):
        return f"F_{self.profile.q}((t))"


QQ = RationalField()


def padic_field(p: int, precision: int = 64) -> PadicField:
    return PadicField(FieldProfile(require_prime(p), precision))


def laurent_field(p: int, s: int = 1, precision: int = 64, modulus=None) -> LaurentField:
    if modulus is None:
        return LaurentField(LaurentProfile.default(p, s, precision))
    return LaurentField(LaurentProfile(p, s, tuple(modulus), precision))


# ---------------------------------------------------------------- matrices


@dataclass(frozen=True)
class LocalMatrix:
    field: object
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(self.field.coerce(x) for x in row) for row in self.entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, field, rows: Sequence[Sequence]) -> LocalMatrix:
        return cls(field, tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, field, n: int) -> LocalMatrix:
        one, zero = field.one(), field.zero()
        return cls(field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def scalar(cls, field, n: int, c) -> LocalMatrix:
        zero = field.zero()
        return cls(field, tuple(tuple(c if i == j else zero for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def with_field(self, field) -> LocalMatrix:
        return LocalMatrix(field, self.entries)

    def __add__(self, other):
        return LocalMatrix(
            self.field,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def __sub__(self, other):
        return LocalMatrix(
            self.field,
            tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
        )

    def __neg__(self):
        return LocalMatrix(self.field, tuple(tuple(-a for a in r) for r in self.entries))

    def scale(self, c) -> LocalMatrix:
        return LocalMatrix(self.field, tuple(tuple(c * a for a in r) for r in self.entries))

    def __matmul__(self, other):
        fast = _rational_matmul(self.entries, other.entries)
        if fast is not None:
            return LocalMatrix(self.field, fast)
        cols = list(zip(*other.entries))
        zero = self.field.zero()
        out = []
        for row in self.entries:
            out.append(tuple(_dot(row, col, zero) for col in cols))
        return LocalMatrix(self.field, tuple(out))

    def is_zero_matrix(self) -> bool:
        return all(self.field.is_zero(x) for row in self.entries for x in row)

    def equals(self, other) -> bool:
        """Exact equality as field elements (refuses on undetermined zeros)."""
        return (self - other).is_zero_matrix()

    def agrees(self, other) -> bool:
        """Equality up to the precision carried by the entries."""
        diff = self - other
        for row in diff.entries:
            for x in row:
                if isinstance(x, (PadicScalar, LaurentScalar)):
                    if not x.is_zero:
                        return False
                elif x != 0:
                    return False
        return True

    def is_exact(self) -> bool:
        return all(self.field.is_exact(x) for row in self.entries for x in row)

    def is_scalar(self):
        """The scalar c when the matrix is c*I, else None."""
        c = self.entries[0][0]
        for i in range(self.n):
            for j in range(self.n):
                target = c if i == j else self.field.zero()
                if not self.field.is_zero(self.entries[i][j] - target):
                    return None
        return c

    def min_precision(self):
        """Smallest absolute precision over inexact entries (inf if exact)."""
        best = INF
        for row in self.entries:
            for x in row:
                if isinstance(x, (PadicScalar, LaurentScalar)) and x.absprec != INF:
                    best = min(best, x.absprec)
        return best

    def __repr__(self):
        return f"LocalMatrix({self.field!r}, {[list(r) for r in self.entries]})"


def _integer_form(entries):
    # (integer matrix, common denominator) when every entry is a Fraction
    den = 1
    for row in entries:
        for x in row:
            if type(x) is not Fraction:
                return None
            den = math.lcm(den, x.denominator)
    return [[x.numerator * (den // x.denominator) for x in row] for row in entries], den


def _rational_matmul(a, b):
    """Product of all-Fraction matrices through one integer product."""
    fa = _integer_form(a)
    if fa is None:
        return None
    fb = _integer_form(b)
    if fb is None:
        return None
    (ia, da), (ib, db) = fa, fb
    den = da * db
    cols = list(zip(*ib))
    return tuple(
        tuple(Fraction(sum(x * y for x, y in zip(row, col)), den) for col in cols) for row in ia
    )


def _dot(row, col, zero):
    acc = zero
    for a, b in zip(row, col):
        acc = acc + a * b
    return acc


def matmul(a: LocalMatrix, b: LocalMatrix) -> LocalMatrix:
    return a @ b


def power_map(M: LocalMatrix, k: int) -> LocalMatrix:
    """M**k by square-and-multiply; negative k goes through the inverse."""
    if k < 0:
        return power_map(inverse(M), -k)
    result = LocalMatrix.identity(M.field, M.n)
    base = M
    while k:
        if k & 1:
            result = result @ base
        k >>= 1
        if k:
            base = base @ base
    return result


def inverse(M: LocalMatrix) -> LocalMatrix:
    """Gauss-Jordan inverse; raises ValueError for singular matrices."""
    n, fld = M.n, M.field
    aug = [list(row) + [fld.one() if i == j else fld.zero() for j in range(n)] for i, row in enumerate(M.entries)]
    for col in range(n):
        pivot = _choose_pivot(aug, col, fld)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = fld.one() / aug[col][col]
        aug[col] = [inv * x for x in aug[col]]
        for r in range(n):
            if r != col and not fld.is_zero(aug[r][col]):
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return LocalMatrix(fld, tuple(tuple(row[n:]) for row in aug))


def _choose_pivot(rows, col, fld):
    # prefer exact monomial / minimal-valuation pivots to limit precision loss
    best, best_key = None, None
    for r in range(col, len(rows)):
        x = rows[r][col]
        if fld.is_zero(x):
            continue
        if isinstance(x, LaurentScalar):
            key = (not (x.is_exact and len(x.coeffs) == 1), x.valuation)
        elif isinstance(x, PadicScalar):
            key = (True, x.valuation)
        else:
            key = (False, 0)
        if best_key is None or key < best_key:
            best, best_key = r, key
    return best


def char_poly(M: LocalMatrix) -> tuple:
    """det(xI - M), lowest degree first, by the division-free Berkowitz method."""
    A, n, fld = M.entries, M.n, M.field
    zero, one = fld.zero(), fld.one()
    prev = [one]  # high -> low
    for k in range(1, n + 1):
        a = A[k - 1][k - 1]
        R = A[k - 1][: k - 1]
        C = [A[i][k - 1] for i in range(k - 1)]
        t = [one, -a]
        v = C
        for _ in range(k - 1):
            t.append(-_dot(R, v, zero))
            v = [_dot(A[i][: k - 1], v, zero) for i in range(k - 1)]
        cur = []
        for i in range(k + 1):
            acc = zero
            for j in range(min(i, k - 1) + 1):
                acc = acc + t[i - j] * prev[j]
            cur.append(acc)
        prev = cur
    return tuple(reversed(prev))


def det(M: LocalMatrix):
    c0 = char_poly(M)[0]
    return c0 if M.n % 2 == 0 else -c0


def is_invertible(M: LocalMatrix) -> bool:
    return not M.field.is_zero(det(M))


def require_invertible(M: LocalMatrix):
    if not is_invertible(M):
        raise ValueError("matrix is singular")


def rank(vectors: list[list], fld) -> int:
    """Rank of a list of row vectors by division-free elimination."""
    rows = [list(v) for v in vectors]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not fld.is_zero(rows[i][col])), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][col]
        for i in range(r + 1, len(rows)):
            f = rows[i][col]
            if not fld.is_zero(f):
                rows[i] = [pv * x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def is_nonderogatory(M: LocalMatrix) -> bool:
    """Minimal polynomial equals the characteristic polynomial."""
    vecs, P = [], LocalMatrix.identity(M.field, M.n)
    for _ in range(M.n):
        vecs.append([x for row in P.entries for x in row])
        P = P @ M
    return rank(vecs, M.field) == M.n


def companion(field, coeffs) -> LocalMatrix:
    """Companion matrix of the monic polynomial with the given low->high coeffs."""
    coeffs = [field.coerce(c) for c in coeffs]
    n = len(coeffs) - 1
    zero, one = field.zero(), field.one()
    rows = []
    for i in range(n):
        row = [zero] * n
        if i > 0:
            row[i - 1] = one
        row[n - 1] = -coeffs[i]
        rows.append(row)
    return LocalMatrix.of(field, rows)


# ---------------------------------------------------------------- polynomials


def poly_trim(f, fld):
    f = list(f)
    while len(f) > 1 and fld.is_zero(f[-1]):
        f.pop()
    return f


def poly_mul(f, g, zero):
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


def poly_mod_monic(g, f, zero):
    """Remainder of g modulo the monic polynomial f (division free)."""
    g = list(g)
    d = len(f) - 1
    for deg in range(len(g) - 1, d - 1, -1):
        c = g[deg]
        for j in range(d + 1):
            g[deg - d + j] = g[deg - d + j] - c * f[j]
    out = g[:d]
    return out + [zero] * (d - len(out))


def poly_eval(f, x, zero):
    acc = zero
    for c in reversed(f):
        acc = acc * x + c
    return acc


def poly_eval_matrix(f, M: LocalMatrix) -> LocalMatrix:
    fld = M.field
    acc = LocalMatrix.scalar(fld, M.n, fld.zero())
    for c in reversed(list(f)):
        acc = acc @ M + LocalMatrix.scalar(fld, M.n, c)
    return acc


def binomial_poly(n: int, fld, c=None) -> list:
    """(x - c)**n, lowest degree first (c defaults to 1)."""
    c = fld.one() if c is None else c
    out = [fld.one()]
    for _ in range(n):
        out = poly_mul(out, [-c, fld.one()], fld.zero())
    return out


# ---------------------------------------------------------------- Newton polygons


@dataclass(frozen=True)
class NewtonPolygon:
    """Root valuations with multiplicities, in increasing order of valuation."""

    segments: tuple

    @property
    def slopes(self) -> list:
        out = []
        for slope, mult in self.segments:
            out.extend([slope] * mult)
        return out

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.segments)

    def to_dict(self):
        return [
            {"slope": "inf" if s == INF else str(s), "multiplicity": m} for s, m in self.segments
        ]


def _coefficient_valuation(c, p):
    if isinstance(c, (PadicScalar, LaurentScalar)):
        return c.valuation, c.absprec
    return vp(c, p), INF


def newton_polygon(f, p: int | None = None) -> NewtonPolygon:
    """Newton polygon of a monic polynomial (low->high coefficients).

    ``p`` is needed only for rational coefficients.  Roots at zero (vanishing
    low coefficients) are reported with slope +inf.
    """
    f = list(f)
    if p is None:
        p = next((c.p for c in f if isinstance(c, PadicScalar)), None)
    if not f or all(_coefficient_valuation(c, p)[0] == INF for c in f):
        raise ValueError("zero polynomial")
    vals = [_coefficient_valuation(c, p) for c in f]
    lead = max(i for i, (v, _) in enumerate(vals) if v != INF)
    vals = vals[: lead + 1]
    low = min(i for i, (v, _) in enumerate(vals) if v != INF)
    points = [(i, Fraction(v)) for i, (v, _) in enumerate(vals) if v != INF]
    hull = []
    for pt in points:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    # undetermined zero coefficients must lie strictly above the hull
    for i, (v, absprec) in enumerate(vals):
        if v == INF and absprec != INF and low < i < lead:
            if absprec <= _hull_height(hull, i):
                raise InsufficientPrecision(f"coefficient {i} is O({absprec}) and may touch the hull")
        if v == INF and absprec != INF and i < low:
            raise InsufficientPrecision(f"coefficient {i} is an undetermined zero")
    segments = []
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        segments.append((-(v2 - v1) / (i2 - i1), i2 - i1))
    segments.sort(key=lambda s: s[0])
    if low > 0:
        segments.append((INF, low))
    return NewtonPolygon(tuple(segments))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_height(hull, i):
    for (i1, v1), (i2, v2) in zip(hull, hull[1:]):
        if i1 <= i <= i2:
            return v1 + (v2 - v1) * Fraction(i - i1, i2 - i1)
    return INF


def matrix_slopes(M: LocalMatrix, p: int | None = None) -> NewtonPolygon:
    if p is None:
        p = M.field.prime
    return newton_polygon(char_poly(M), p)


__all__ = [
    "QQ",
    "LaurentField",
    "LocalMatrix",
    "NewtonPolygon",
    "PadicField",
    "RationalField",
    "char_poly",
    "companion",
    "det",
    "inverse",
    "laurent_field",
    "newton_polygon",
    "padic_field",
    "power_map",
]

