"""Bounded-precision arithmetic in Q_p.

A nonzero element is stored as ``p**valuation * unit`` where ``unit`` is known
modulo ``p**relprec`` (``relprec <= profile.precision``).  Zero carries an
absolute precision: the exact zero has ``absprec == inf``, while a zero that
came out of cancellation is only known to vanish modulo ``p**absprec``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from sympy.ntheory import nthroot_mod

from .arith import INF, InsufficientPrecision, require_prime, split_prime_power, vp, vp_int

_BRUTE_RESIDUE_LIMIT = 1 << 16


@dataclass(frozen=True)
class FieldProfile:
    """Prime ``p`` and the number ``precision`` of base-p digits carried."""

    p: int
    precision: int

    def __post_init__(self):
        require_prime(self.p)
        if self.precision < 1:
            raise ValueError("precision must be at least 1")


@dataclass(frozen=True)
class PadicScalar:
    profile: FieldProfile
    valuation: int | float
    unit: int
    absprec: int | float

    # ------------------------------------------------------------ construction

    @classmethod
    def zero(cls, profile, absprec=INF):
        return cls(profile, INF, 0, absprec)

    @classmethod
    def _normalize(cls, profile, v, w, absprec):
        """Element p**v * w known modulo p**absprec (w an integer)."""
        p, n = profile.p, profile.precision
        if absprec == INF:
            if w == 0:
                return cls.zero(profile)
            shift = vp_int(w, p)
            v += shift
            return cls(profile, v, (w // p**shift) % p**n, v + n)
        digits = absprec - v
        if digits <= 0:
            return cls.zero(profile, absprec)
        w %= p**digits
        if w == 0:
            return cls.zero(profile, absprec)
        shift = vp_int(w, p)
        w //= p**shift
        v += shift
        digits = min(digits - shift, n)
        return cls(profile, v, w % p**digits, v + digits)

    @classmethod
    def from_rational(cls, a, profile: FieldProfile) -> PadicScalar:
        a = Fraction(a)
        if a == 0:
            return cls.zero(profile)
        p, n = profile.p, profile.precision
        v = vp(a, p)
        num = a.numerator // p ** max(v, 0)
        den = a.denominator // p ** max(-v, 0)
        mod = p**n
        return cls(profile, v, num * pow(den, -1, mod) % mod, v + n)

    # ------------------------------------------------------------ properties

    @property
    def p(self):
        return self.profile.p

    @property
    def unit_digits(self):
        return self.unit

    @property
    def relprec(self):
        if self.is_zero:
            return 0
        return self.absprec - self.valuation

    @property
    def is_zero(self):
        """True when the element vanishes at its known precision."""
        return self.valuation == INF

    @property
    def is_exact_zero(self):
        return self.valuation == INF and self.absprec == INF

    def to_fraction(self) -> Fraction:
        """Rational representative p**v * unit (the digits actually stored)."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.p) ** self.valuation

    # ------------------------------------------------------------ arithmetic

    def _coerce(self, other):
        if isinstance(other, PadicScalar):
            if other.profile != self.profile:
                raise ValueError("profile mismatch")
            return other
        if isinstance(other, (int, Rational)):
            return PadicScalar.from_rational(other, self.profile)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        absprec = min(self.absprec, other.absprec)
        terms = [(x.valuation, x.unit) for x in (self, other) if not x.is_zero]
        if not terms:
            return PadicScalar.zero(self.profile, absprec)
        vmin = min(v for v, _ in terms)
        w = sum(u * self.p ** (v - vmin) for v, u in terms)
        return PadicScalar._normalize(self.profile, vmin, w, absprec)

    __radd__ = __add__

    def __neg__(self):
        if self.is_zero:
            return self
        mod = self.p**self.relprec
        return PadicScalar(self.profile, self.valuation, (-self.unit) % mod, self.absprec)

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
            return PadicScalar.zero(self.profile)
        if x.is_zero or y.is_zero:
            # O(p^a) * y has absolute precision a + v(y) (v = a for a zero)
            a = (x.absprec if x.is_zero else x.valuation) + (y.absprec if y.is_zero else y.valuation)
            return PadicScalar.zero(self.profile, a)
        digits = min(x.relprec, y.relprec)
        v = x.valuation + y.valuation
        return PadicScalar(self.profile, v, x.unit * y.unit % self.p**digits, v + digits)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero:
            raise ZeroDivisionError("p-adic division by zero")
        digits = self.relprec
        mod = self.p**digits
        return PadicScalar(self.profile, -self.valuation, pow(self.unit, -1, mod), -self.valuation + digits)

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

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return PadicScalar.from_rational(1, self.profile)
        if k < 0:
            return self.inverse() ** (-k)
        if self.is_zero:
            return PadicScalar.zero(self.profile, self.absprec * k if self.absprec != INF else INF)
        digits = self.relprec
        v = self.valuation * k
        return PadicScalar(self.profile, v, pow(self.unit, k, self.p**digits), v + digits)

    def shift(self, j: int) -> PadicScalar:
        """Multiply by p**j without touching the unit digits."""
        if self.is_zero:
            return PadicScalar.zero(self.profile, self.absprec + j)
        return PadicScalar(self.profile, self.valuation + j, self.unit, self.absprec + j)

    # ------------------------------------------------------------ display / io

    def __repr__(self):
        if self.is_exact_zero:
            return f"PadicScalar(0, p={self.p})"
        if self.is_zero:
            return f"PadicScalar(O({self.p}^{self.absprec}))"
        return f"PadicScalar({self.p}^{self.valuation} * {self.unit} + O({self.p}^{self.absprec}))"

    def to_dict(self) -> dict:
        out = {
            "p": self.p,
            "precision": self.profile.precision,
            "valuation": "inf" if self.is_zero else self.valuation,
            "unit_digits": str(self.unit),
        }
        if self.is_zero:
            if self.absprec != INF:
                out["absprec"] = self.absprec
        elif self.relprec != self.profile.precision:
            out["digits"] = self.relprec
        return out

    @classmethod
    def from_dict(cls, data: dict) -> PadicScalar:
        profile = FieldProfile(int(data["p"]), int(data["precision"]))
        if data["valuation"] == "inf":
            return cls.zero(profile, data.get("absprec", INF))
        v = int(data["valuation"])
        digits = int(data.get("digits", profile.precision))
        unit = int(data["unit_digits"])
        if not 0 < unit < profile.p**digits or unit % profile.p == 0:
            raise ValueError("unit_digits must be a unit below p^digits")
        return cls(profile, v, unit, v + digits)


def from_rational(a, profile: FieldProfile) -> PadicScalar:
    return PadicScalar.from_rational(a, profile)


def valuation(x: PadicScalar):
    return x.valuation


def arithmetic(x: PadicScalar, y: PadicScalar, op: str) -> PadicScalar:
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


# ---------------------------------------------------------------- unit group


def _require_unit(x: PadicScalar):
    if x.is_zero or x.valuation != 0:
        raise ValueError("expected a p-adic unit")


def teichmuller(x: PadicScalar) -> PadicScalar:
    """Root of unity of order dividing p-1 congruent to x mod p (+-1 for p = 2)."""
    _require_unit(x)
    p, n = x.p, x.profile.precision
    if p == 2:
        if x.relprec < 2:
            raise InsufficientPrecision("sign of a 2-adic unit needs two digits")
        return PadicScalar.from_rational(1 if x.unit % 4 == 1 else -1, x.profile)
    mod = p**n
    return PadicScalar(x.profile, 0, pow(x.unit % p, p ** (n - 1), mod), n)


def _principal_floor(p):
    return 2 if p == 2 else 1


def principal_log(x: PadicScalar) -> PadicScalar:
    """log(x) for x in 1 + pZ_p (1 + 4Z_2 when p = 2).

    Computed from the stored representative; the result's absolute precision
    equals that of x, since log is an isometry on this domain.
    """
    _require_unit(x)
    p = x.p
    z = x - 1
    floor = _principal_floor(p)
    if z.is_zero:
        return PadicScalar.zero(x.profile, z.absprec)
    if z.valuation < floor:
        raise ValueError(f"principal_log needs v(x-1) >= {floor}")
    target = x.absprec
    mod = p**target
    big_z = z.unit * p**z.valuation
    total = 0
    power = 1
    i = 0
    while True:
        i += 1
        # v(z^i / i) >= i*v(z) - log_p(i), increasing for i >= 2
        if i >= 2 and i * z.valuation - math.log(i, p) >= target:
            break
        power *= big_z
        vi = vp_int(i, p)
        if i * z.valuation - vi >= target:
            continue
        term = (power // p**vi) * pow(i // p**vi, -1, mod)
        total += term if i % 2 else -term
    return PadicScalar._normalize(x.profile, 0, total, target)


def principal_exp(w: PadicScalar) -> PadicScalar:
    """exp(w) for v(w) >= 1 (>= 2 when p = 2)."""
    p = w.p
    floor = _principal_floor(p)
    if w.is_exact_zero:
        return PadicScalar.from_rational(1, w.profile)
    if w.is_zero:
        return PadicScalar._normalize(w.profile, 0, 1, min(w.absprec, w.profile.precision))
    if w.valuation < floor:
        raise ValueError(f"principal_exp needs v(w) >= {floor}")
    target = min(w.absprec, w.profile.precision)
    mod = p**target
    big_w = w.unit * p**w.valuation
    total = 1
    power = 1
    fact = 1
    fact_v = 0
    i = 0
    while True:
        i += 1
        power *= big_w
        vi = vp_int(i, p)
        fact *= i // p**vi
        fact_v += vi
        excess = i * w.valuation - fact_v
        # v(i!) < i/(p-1), so excess only grows past this point
        if excess >= target and i * (w.valuation - 1 / (p - 1)) >= target:
            break
        if excess >= target:
            continue
        total += (power // p**fact_v) * pow(fact, -1, mod)
    return PadicScalar._normalize(w.profile, 0, total, target)


# ---------------------------------------------------------------- k-th roots


def decision_digits(p: int, k: int) -> int:
    """Unit digits needed to decide whether a unit is a k-th power in Q_p."""
    a, _ = split_prime_power(k, p)
    if p == 2:
        return a + 2 if a else 1
    return a + 1


def kth_root_exists_scalar(x: PadicScalar, k: int) -> bool:
    if not isinstance(k, int) or k <= 0:
        raise ValueError("k must be a positive integer")
    if x.is_zero:
        raise ValueError("k-th root test needs a nonzero element")
    if x.valuation % k:
        return False
    p, u, digits = x.p, x.unit, x.relprec
    a, m = split_prime_power(k, p)
    if p == 2:
        if a == 0:
            return True
        need = a + 2
        if digits < need:
            if u % 2**digits != 1 % 2**digits:
                return False
            raise InsufficientPrecision(f"need {need} digits, have {digits}")
        return u % 2**need == 1
    if pow(u % p, (p - 1) // math.gcd(m, p - 1), p) != 1:
        return False
    if a == 0:
        return True
    need = a + 1
    if digits < need:
        if pow(u, p - 1, p**digits) != 1 % p**digits:
            return False
        raise InsufficientPrecision(f"need {need} digits, have {digits}")
    return pow(u, p - 1, p**need) == 1


def _residue_root(c: int, k: int, p: int) -> int:
    if p <= _BRUTE_RESIDUE_LIMIT:
        for r in range(1, p):
            if pow(r, k, p) == c:
                return r
        raise ArithmeticError("no residue root")  # pragma: no cover
    root = nthroot_mod(c, k, p)
    if root is None:  # pragma: no cover
        raise ArithmeticError("no residue root")
    return int(root)


def kth_root_scalar(x: PadicScalar, k: int) -> PadicScalar | None:
    """A k-th root of x in Q_p, or None when none exists."""
    if not kth_root_exists_scalar(x, k):
        return None
    profile, p = x.profile, x.p
    unit = PadicScalar(profile, 0, x.unit, x.relprec)
    if p == 2:
        sign = teichmuller(unit)
        principal = unit * sign
        zeta = sign  # only -1 when k is odd, and (-1)^k = -1
    else:
        zeta = teichmuller(PadicScalar.from_rational(_residue_root(x.unit % p, k, p), profile))
        principal = unit / teichmuller(unit)
    root_unit = zeta * principal_exp(principal_log(principal) / k)
    return root_unit.shift(x.valuation // k)
