"""Arithmetic in F_q((t)) with a bounded coefficient window.

A nonzero ``LaurentScalar`` is ``t**valuation * sum(coeffs[i] * t**i)`` with
``coeffs[0] != 0``.  Two regimes share the type:

* exact values (``absprec == inf``) are Laurent polynomials, stored in full;
* windowed values are known modulo ``t**absprec`` and carry at most
  ``profile.precision`` coefficients.

Decisions on windowed values are made for the window: a windowed value is
treated as the class of all series agreeing with it modulo ``t**absprec``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels
from .arith import INF, InsufficientPrecision, split_prime_power
from .finite_field import first_irreducible, get_field


@dataclass(frozen=True)
class LaurentProfile:
    p: int
    s: int
    irreducible_poly: tuple[int, ...]
    precision: int

    def __post_init__(self):
        object.__setattr__(self, "irreducible_poly", tuple(int(c) for c in self.irreducible_poly))
        if len(self.irreducible_poly) != self.s + 1:
            raise ValueError("irreducible_poly must have degree s")
        if self.precision < 1:
            raise ValueError("precision must be at least 1")
        get_field(self.p, self.irreducible_poly)  # validates irreducibility

    @classmethod
    def default(cls, p: int, s: int = 1, precision: int = 64) -> LaurentProfile:
        return cls(p, s, first_irreducible(p, s), precision)

    @cached_property
    def field(self):
        return get_field(self.p, self.irreducible_poly)

    @property
    def q(self):
        return self.p**self.s


def _as_array(values):
    return np.asarray(values, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class LaurentScalar:
    profile: LaurentProfile
    valuation: int | float
    coeffs: tuple[int, ...] = field(default=())
    absprec: int | float = INF

    # ------------------------------------------------------------ construction

    @classmethod
    def zero(cls, profile, absprec=INF):
        return cls(profile, INF, (), absprec)

    @classmethod
    def _normalize(cls, profile, v, arr, absprec):
        arr = _as_array(arr)
        nz = np.flatnonzero(arr)
        if absprec == INF:
            if nz.size == 0:
                return cls.zero(profile)
            arr = arr[nz[0] : nz[-1] + 1]
            return cls(profile, v + int(nz[0]), tuple(int(c) for c in arr), INF)
        length = absprec - v
        if nz.size == 0 or nz[0] >= length:
            return cls.zero(profile, absprec)
        start = int(nz[0])
        v += start
        length = min(length - start, profile.precision)
        window = np.zeros(length, dtype=np.int64)
        chunk = arr[start : start + length]
        window[: len(chunk)] = chunk
        return cls(profile, v, tuple(int(c) for c in window), v + length)

    @classmethod
    def from_coeffs(cls, profile, coeffs, valuation=0, exact=True):
        """Build from a coefficient list starting at t**valuation.

        Coefficients are encoded field elements (ints) or digit lists.
        """
        fld = profile.field
        enc = [fld.encode(c) if isinstance(c, (list, tuple)) else int(c) % fld.q for c in coeffs]
        if exact:
            return cls._normalize(profile, valuation, enc, INF)
        return cls._normalize(profile, valuation, enc, valuation + len(enc))

    @classmethod
    def constant(cls, profile, c: int):
        return cls.from_coeffs(profile, [c])

    @classmethod
    def from_int(cls, profile, n: int):
        return cls.constant(profile, profile.field.from_int(n))

    @classmethod
    def uniformizer(cls, profile):
        return cls.from_coeffs(profile, [1], valuation=1)

    # ------------------------------------------------------------ properties

    @property
    def field(self):
        return self.profile.field

    @property
    def is_zero(self):
        return self.valuation == INF

    @property
    def is_exact(self):
        return self.absprec == INF

    @property
    def is_exact_zero(self):
        return self.is_zero and self.is_exact

    @property
    def relprec(self):
        if self.is_zero:
            return 0
        return INF if self.is_exact else self.absprec - self.valuation

    @property
    def leading(self):
        return self.coeffs[0]

    def is_constant(self) -> bool:
        """Exactly an element of F_q."""
        return self.is_exact_zero or (self.is_exact and self.valuation == 0 and len(self.coeffs) == 1)

    def __eq__(self, other):
        if not isinstance(other, LaurentScalar):
            other = self._coerce(other)
            if other is NotImplemented:
                return NotImplemented
        return (
            self.profile == other.profile
            and self.valuation == other.valuation
            and self.coeffs == other.coeffs
            and self.absprec == other.absprec
        )

    def __hash__(self):
        return hash((self.valuation, self.coeffs, self.absprec))

    # ------------------------------------------------------------ arithmetic

    def _coerce(self, other):
        if isinstance(other, LaurentScalar):
            if other.profile != self.profile:
                raise ValueError("profile mismatch")
            return other
        if isinstance(other, int):
            return LaurentScalar.from_int(self.profile, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        absprec = min(self.absprec, other.absprec)
        terms = [x for x in (self, other) if not x.is_zero]
        if not terms:
            return LaurentScalar.zero(self.profile, absprec)
        vmin = min(x.valuation for x in terms)
        if absprec == INF:
            length = max(x.valuation + len(x.coeffs) for x in terms) - vmin
        else:
            length = absprec - vmin
            if length <= 0:
                return LaurentScalar.zero(self.profile, absprec)
        add = self.field.tables.add
        acc = np.zeros(length, dtype=np.int64)
        for x in terms:
            off = x.valuation - vmin
            if off >= length:
                continue
            chunk = _as_array(x.coeffs[: length - off])
            acc[off : off + len(chunk)] = add[acc[off : off + len(chunk)], chunk]
        return LaurentScalar._normalize(self.profile, vmin, acc, absprec)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        neg = self.field.tables.neg[_as_array(self.coeffs)]
        return LaurentScalar(self.profile, self.valuation, tuple(int(c) for c in neg), self.absprec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        x, y = self, other
        if x.is_exact_zero or y.is_exact_zero:
            return LaurentScalar.zero(self.profile)
        if x.is_zero or y.is_zero:
            a = (x.absprec if x.is_zero else x.valuation) + (y.absprec if y.is_zero else y.valuation)
            return LaurentScalar.zero(self.profile, a)
        v = x.valuation + y.valuation
        tables = self.field.tables
        if x.is_exact and y.is_exact:
            out_len = len(x.coeffs) + len(y.coeffs) - 1
            prod = _kernels.convolve(_as_array(x.coeffs), _as_array(y.coeffs), out_len, tables)
            return LaurentScalar._normalize(self.profile, v, prod, INF)
        digits = min(x.relprec, y.relprec, self.profile.precision)
        prod = _kernels.convolve(_as_array(x.coeffs), _as_array(y.coeffs), digits, tables)
        return LaurentScalar._normalize(self.profile, v, prod, v + digits)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("Laurent division by zero")
        fld = self.field
        if self.is_exact and len(self.coeffs) == 1:
            return LaurentScalar(self.profile, -self.valuation, (fld.inv(self.coeffs[0]),), INF)
        digits = min(self.relprec, self.profile.precision)
        a = np.zeros(digits, dtype=np.int64)
        chunk = _as_array(self.coeffs[:digits])
        a[: len(chunk)] = chunk
        inv = _kernels.series_inverse(a, digits, fld.tables)
        return LaurentScalar._normalize(self.profile, -self.valuation, inv, -self.valuation + digits)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentScalar.from_int(self.profile, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, j: int) -> LaurentScalar:
        """Multiply by t**j."""
        if self.is_zero:
            return LaurentScalar.zero(self.profile, self.absprec + j)
        return LaurentScalar(self.profile, self.valuation + j, self.coeffs, self.absprec + j)

    def unit_part(self) -> LaurentScalar:
        return self.shift(-self.valuation)

    # ------------------------------------------------------------ display / io

    def __repr__(self):
        if self.is_exact_zero:
            return "LaurentScalar(0)"
        if self.is_zero:
            return f"LaurentScalar(O(t^{self.absprec}))"
        fld = self.field
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                coef = str(c) if fld.s == 1 else str(fld.digits(c))
                terms.append(f"{coef}*t^{self.valuation + i}")
        tail = "" if self.is_exact else f" + O(t^{self.absprec})"
        return f"LaurentScalar({' + '.join(terms)}{tail})"

    def to_dict(self, with_profile=True) -> dict:
        fld = self.field
        out = {}
        if with_profile:
            out.update(
                p=self.profile.p,
                s=self.profile.s,
                modulus=list(self.profile.irreducible_poly),
                precision=self.profile.precision,
            )
        out["valuation"] = "inf" if self.is_zero else self.valuation
        out["coeffs"] = [fld.digits(c) for c in self.coeffs]
        out["exact"] = self.is_exact
        if not self.is_exact and self.is_zero:
            out["absprec"] = self.absprec
        return out

    @classmethod
    def from_dict(cls, data: dict, profile: LaurentProfile | None = None) -> LaurentScalar:
        if profile is None:
            profile = LaurentProfile(
                int(data["p"]), int(data["s"]), tuple(data["modulus"]), int(data["precision"])
            )
        exact = bool(data.get("exact", True))
        if data["valuation"] == "inf":
            return cls.zero(profile, INF if exact else data.get("absprec", INF))
        coeffs = data["coeffs"]
        v = int(data["valuation"])
        if not coeffs:
            raise ValueError("nonzero Laurent scalar needs coefficients")
        x = cls.from_coeffs(profile, coeffs, v, exact)
        if x.is_zero or x.valuation != v:
            raise ValueError("leading coefficient must be nonzero")
        return x


def laurent_arithmetic(x: LaurentScalar, y: LaurentScalar, op: str) -> LaurentScalar:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def frobenius_root(x: LaurentScalar) -> LaurentScalar | None:
    """The unique y with y**p == x, or None when x is not a p-th power."""
    if x.is_zero:
        raise ValueError("frobenius_root needs a nonzero element")
    p = x.profile.p
    if x.valuation % p:
        return None
    if any(c for i, c in enumerate(x.coeffs) if i % p):
        return None
    fld = x.field
    roots = [fld.frobenius_root(c) for c in x.coeffs[::p]]
    v = x.valuation // p
    if x.is_exact:
        return LaurentScalar._normalize(x.profile, v, roots, INF)
    # y mod t^j determines y^p mod t^(pj)
    digits = -(-x.relprec // p)
    return LaurentScalar._normalize(x.profile, v, roots, v + digits)


def _frobenius_chain(u: LaurentScalar, a: int):
    for _ in range(a):
        u = frobenius_root(u)
        if u is None:
            return None
    return u


def kth_root_exists_scalar_charp(x: LaurentScalar, k: int) -> bool:
    if not isinstance(k, int) or k <= 0:
        raise ValueError("k must be a positive integer")
    if x.is_zero:
        raise ValueError("k-th root test needs a nonzero element")
    if x.valuation % k:
        return False
    a, m = split_prime_power(k, x.profile.p)
    w = _frobenius_chain(x.unit_part(), a)
    if w is None:
        return False
    if w.relprec < 1:  # pragma: no cover - a nonzero value always keeps one digit
        raise InsufficientPrecision("empty coefficient window")
    return x.field.is_mth_power(w.leading, m)


def _unit_mth_root(w: LaurentScalar, m: int) -> LaurentScalar:
    """m-th root of a unit series with m prime to p (Newton iteration)."""
    fld = w.field
    r0 = fld.root(w.leading, m)
    profile = w.profile
    if m == 1:
        return w
    if w.is_exact and len(w.coeffs) == 1:
        return LaurentScalar.constant(profile, r0)
    digits = min(w.relprec, profile.precision)
    y = LaurentScalar._normalize(profile, 0, [r0], digits)
    m_elem = LaurentScalar.from_int(profile, m)
    steps = 1
    while (1 << (steps - 1)) < digits:
        steps += 1
    for _ in range(steps + 1):
        y = y - (y**m - w) / (m_elem * y ** (m - 1))
    return y


def kth_root_scalar_charp(x: LaurentScalar, k: int) -> LaurentScalar | None:
    """A k-th root of x in F_q((t)), or None when none exists."""
    if not kth_root_exists_scalar_charp(x, k):
        return None
    a, m = split_prime_power(k, x.profile.p)
    w = _frobenius_chain(x.unit_part(), a)
    return _unit_mth_root(w, m).shift(x.valuation // k)
