"""The compact family G = (S^1 x| Z/n) / Gamma, odd components acting by inversion.

Elements are pairs (angle in Q/Z, component mod n).  Gamma is generated by a
central element (theta, c) with c even and theta in {0, 1/2}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache


@dataclass(frozen=True)
class GroupSpec:
    n: int
    gamma_angle: Fraction = Fraction(0)
    gamma_component: int = 0

    def __post_init__(self):
        if self.n < 2 or self.n % 2:
            raise ValueError("n must be an even positive integer")
        angle = Fraction(self.gamma_angle) % 1
        comp = self.gamma_component % self.n
        if comp % 2:
            raise ValueError("gamma component must be even (central)")
        if angle not in (0, Fraction(1, 2)):
            raise ValueError("gamma angle must be 0 or 1/2 (fixed by inversion)")
        object.__setattr__(self, "gamma_angle", angle)
        object.__setattr__(self, "gamma_component", comp)

    @classmethod
    def from_dict(cls, data: dict) -> GroupSpec:
        gamma = data.get("gamma") or {}
        return cls(int(data["n"]), Fraction(str(gamma.get("angle", "0"))), int(gamma.get("component", 0)))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "gamma": {"angle": str(self.gamma_angle), "component": self.gamma_component},
        }

    def gamma_elements(self) -> list[tuple[Fraction, int]]:
        return list(_gamma_elements(self))


@lru_cache(maxsize=None)
def _gamma_elements(spec: GroupSpec) -> tuple:
    out, cur = [], (Fraction(0), 0)
    while True:
        out.append(cur)
        cur = ((cur[0] + spec.gamma_angle) % 1, (cur[1] + spec.gamma_component) % spec.n)
        if cur == (0, 0):
            return tuple(out)


@dataclass(frozen=True, order=True)
class GroupElement:
    component: int
    angle: Fraction

    def to_dict(self) -> dict:
        return {"angle": str(self.angle), "component": self.component}


def _canonical(spec: GroupSpec, angle, component) -> GroupElement:
    angle, component = Fraction(angle) % 1, component % spec.n
    return min(
        GroupElement((component + c) % spec.n, (angle + a) % 1) for a, c in _gamma_elements(spec)
    )


def element(spec: GroupSpec, angle, component: int) -> GroupElement:
    return _canonical(spec, angle, component)


def identity(spec: GroupSpec) -> GroupElement:
    return _canonical(spec, 0, 0)


def multiply(x: GroupElement, y: GroupElement, spec: GroupSpec) -> GroupElement:
    sign = -1 if x.component % 2 else 1
    return _canonical(spec, x.angle + sign * y.angle, x.component + y.component)


def inverse(x: GroupElement, spec: GroupSpec) -> GroupElement:
    angle = x.angle if x.component % 2 else -x.angle
    return _canonical(spec, angle, -x.component)


def power(x: GroupElement, k: int, spec: GroupSpec) -> GroupElement:
    if k < 0:
        return power(inverse(x, spec), -k, spec)
    result, base = identity(spec), x
    while k:
        if k & 1:
            result = multiply(result, base, spec)
        base = multiply(base, base, spec)
        k >>= 1
    return result


def order(x: GroupElement, spec: GroupSpec) -> int:
    e = identity(spec)
    bound = 2 * spec.n * len(_gamma_elements(spec)) * x.angle.denominator
    cur, m = x, 1
    while cur != e:
        cur = multiply(cur, x, spec)
        m += 1
        if m > bound:  # pragma: no cover - angles are rational
            raise ArithmeticError("order search exceeded its bound")
    return m


def component_group_order(spec: GroupSpec) -> int:
    return math.gcd(spec.gamma_component, spec.n)


@dataclass(frozen=True)
class CartanClass:
    kind: str  # "torus" | "cyclic"
    order: int | None
    representative: GroupElement

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "representative": self.representative.to_dict()}
        if self.kind == "cyclic":
            out["order"] = self.order
        return out


def cartan_classes(spec: GroupSpec) -> list[CartanClass]:
    """The circle plus one cyclic class per subgroup <(0, a)>, a odd.

    Conjugating (z, a) by (w, 0) gives (z + 2w, a) for odd a, so the angle of an
    odd-component generator can be taken to be 0.
    """
    return list(_cartan_classes(spec))


@lru_cache(maxsize=None)
def _cartan_classes(spec: GroupSpec) -> tuple:
    classes = [CartanClass("torus", None, identity(spec))]
    seen = set()
    for a in range(1, spec.n, 2):
        g = element(spec, 0, a)
        m = order(g, spec)
        members = frozenset(power(g, j, spec) for j in range(m))
        if members in seen:
            continue
        seen.add(members)
        classes.append(CartanClass("cyclic", m, g))
    return tuple(classes)


def pk_surjective_on_class(cls: CartanClass, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    if cls.kind == "torus":
        return True
    return math.gcd(k, cls.order) == 1


def is_power_dense(spec: GroupSpec, k: int) -> bool:
    return all(pk_surjective_on_class(c, k) for c in cartan_classes(spec))


def density_gcd_oracle(spec: GroupSpec, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    return math.gcd(k, component_group_order(spec)) == 1


def density_report(spec: GroupSpec, k: int) -> dict:
    dense = is_power_dense(spec, k)
    return {
        "spec": spec.to_dict(),
        "classes": [c.to_dict() for c in cartan_classes(spec)],
        "k": k,
        "dense": dense,
        "oracle_agrees": dense == density_gcd_oracle(spec, k),
    }


WORKED_SPEC = GroupSpec(4, Fraction(1, 2), 2)
