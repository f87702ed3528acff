"""Floating-point evaluation of the Lerch transcendent and the zeta integrals."""

from .lerch import LerchDomainError, lerch_phi, lerch_phi_batch
from .quadrature import ComplexEval, QuadratureConfig
from .zeta import (
    RelationCheck,
    ZetaDomainError,
    riemann_zeta_real,
    singular_radius,
    xi_D_at_neg_int,
    xi_D_hankel,
    xi_D_numeric,
    xi_N_numeric,
    xi_relation_check,
)

__all__ = [
    "ComplexEval",
    "LerchDomainError",
    "QuadratureConfig",
    "RelationCheck",
    "ZetaDomainError",
    "lerch_phi",
    "lerch_phi_batch",
    "riemann_zeta_real",
    "singular_radius",
    "xi_D_at_neg_int",
    "xi_D_hankel",
    "xi_D_numeric",
    "xi_N_numeric",
    "xi_relation_check",
]
