"""Power maps, k-th roots and unipotent powers in GL_n over Q, Q_p and F_q((t))."""

from .arith import InsufficientPrecision
from .cartan import GroupSpec, cartan_classes, density_gcd_oracle, is_power_dense
from .global_rational import finite_order_coprimality, global_roots_all_orders, global_unipotent_power
from .laurent import LaurentProfile, LaurentScalar, kth_root_exists_scalar_charp, kth_root_scalar_charp
from .matrices import QQ, LocalMatrix, NewtonPolygon, char_poly, laurent_field, newton_polygon, padic_field, power_map
from .padic import FieldProfile, PadicScalar, kth_root_exists_scalar, kth_root_scalar
from .power_lab import (
    CyclicClosure,
    RootVerdict,
    TowerWitness,
    cyclic_closure,
    cyclic_root,
    eigenvalue_congruence_check,
    has_kth_root,
    is_distal,
    is_unipotent,
    one_parameter_sample,
    roots_all_orders,
    torsion_exponent_bound,
    unipotent_kth_root,
    unipotent_log,
    unipotent_power_bound,
    unipotent_power_exponent,
    verify_tower,
)

__all__ = [
    "QQ",
    "CyclicClosure",
    "FieldProfile",
    "GroupSpec",
    "InsufficientPrecision",
    "LaurentProfile",
    "LaurentScalar",
    "LocalMatrix",
    "NewtonPolygon",
    "PadicScalar",
    "RootVerdict",
    "TowerWitness",
    "cartan_classes",
    "char_poly",
    "cyclic_closure",
    "cyclic_root",
    "density_gcd_oracle",
    "eigenvalue_congruence_check",
    "finite_order_coprimality",
    "global_roots_all_orders",
    "global_unipotent_power",
    "has_kth_root",
    "is_distal",
    "is_power_dense",
    "is_unipotent",
    "kth_root_exists_scalar",
    "kth_root_exists_scalar_charp",
    "kth_root_scalar",
    "kth_root_scalar_charp",
    "laurent_field",
    "newton_polygon",
    "one_parameter_sample",
    "padic_field",
    "power_map",
    "roots_all_orders",
    "torsion_exponent_bound",
    "unipotent_kth_root",
    "unipotent_log",
    "unipotent_power_bound",
    "unipotent_power_exponent",
    "verify_tower",
]
