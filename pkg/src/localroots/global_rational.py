"""Rational matrices seen through many completions at once."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import require_prime, vp_int
from .matrices import LocalMatrix, padic_field, power_map
from .power_lab import (
    cyclic_closure,
    cyclic_root,
    is_distal,
    is_unipotent,
    roots_all_orders,
    torsion_exponent_bound,
    unipotent_kth_root,
    unipotent_power_exponent,
)


@dataclass(frozen=True)
class PrimeEntry:
    prime: int
    is_distal: bool
    exponent: int | None


@dataclass(frozen=True)
class GlobalReport:
    matrix: LocalMatrix
    entries: tuple
    exponent: int | None
    is_unipotent: bool
    roots_all_orders: str
    order: int | str

    def to_dict(self) -> dict:
        return {
            "primes": [
                {"prime": e.prime, "is_distal": e.is_distal, "unipotent_power_exponent": e.exponent}
                for e in self.entries
            ],
            "unipotent_power_exponent": self.exponent,
            "is_unipotent": self.is_unipotent,
            "roots_all_orders": self.roots_all_orders,
            "order": self.order,
        }


def _require_rational(M: LocalMatrix):
    if M.field.kind != "rational":
        raise ValueError("expected a matrix over Q")


def global_unipotent_power(M: LocalMatrix, primes) -> GlobalReport:
    _require_rational(M)
    primes = [require_prime(p) for p in primes]
    if not primes:
        raise ValueError("need at least one prime")
    entries = []
    for p in primes:
        Mp = M.with_field(padic_field(p))
        entries.append(PrimeEntry(p, is_distal(Mp), unipotent_power_exponent(Mp)))
    present = {e.exponent for e in entries if e.exponent is not None}
    if len(present) > 1:
        raise AssertionError(f"completions disagree on the unipotent exponent: {sorted(present)}")
    if present and any(e.exponent is None for e in entries):
        raise AssertionError("exponent present at some primes and absent at others")
    exponent = present.pop() if present else None
    return GlobalReport(
        M,
        tuple(entries),
        exponent,
        is_unipotent(M),
        global_roots_all_orders(M),
        cyclic_closure(M).order,
    )


def global_roots_all_orders(M: LocalMatrix) -> str:
    """'yes' or 'no'.  Over Q this is unipotency; over F_q(t) it is M == I."""
    if M.field.kind not in ("rational", "laurent"):
        raise ValueError("expected a matrix over Q or F_q(t)")
    return roots_all_orders(M).status


def global_root_witness(M: LocalMatrix, k: int) -> LocalMatrix:
    """Rational k-th root of a rational unipotent matrix."""
    _require_rational(M)
    return unipotent_kth_root(M, k)


@dataclass(frozen=True)
class CoprimalityResult:
    status: str  # "consistent" | "violated"
    order: int
    q: int
    witnesses: tuple  # (k, exponent a, g^a)
    blocked_depth: int | None

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "order": self.order,
            "q": self.q,
            "witnesses": [{"k": k, "exponent": a} for k, a, _ in self.witnesses],
            "blocked_depth": self.blocked_depth,
        }


def finite_order_coprimality(M: LocalMatrix, q: int, depth: int) -> CoprimalityResult:
    """q^k-th roots of a finite-order M for k <= depth, or the depth where they stop.

    When q divides the order d, no q-th root lies in <M>, and no q^j-th root
    exists anywhere in GL_n for j = v_q(T) - v_q(d) + 1, T the torsion bound.
    """
    if M.field.kind not in ("rational", "laurent"):
        raise ValueError("expected a matrix over Q or F_q(t)")
    require_prime(q)
    H = cyclic_closure(M)
    if not H.is_finite:
        raise ValueError("matrix has infinite order")
    d = H.order
    if d % q == 0:
        T = torsion_exponent_bound(M.n, M.field)
        return CoprimalityResult("violated", d, q, (), vp_int(T, q) - vp_int(d, q) + 1)
    witnesses = []
    for k in range(1, depth + 1):
        W = cyclic_root(H, q, k)
        a = pow(q**k, -1, d) if d > 1 else 0
        witnesses.append((k, a, W))
    return CoprimalityResult("consistent", d, q, tuple(witnesses), None)


def verify_coprimality_witnesses(M: LocalMatrix, result: CoprimalityResult) -> bool:
    return all(power_map(W, result.q**k).equals(M) for k, _, W in result.witnesses)


