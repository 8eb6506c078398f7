"""Super-Schur functions in superspace, exactly.

Superpolynomials live in the ring generated by even x_k and odd theta_k with
rational coefficients.  The four super-Schur families are built by strings of
super Bernstein modes acting on 1, and the Pieri rules come with an algebraic
oracle that checks them.
"""
from .bases import (SchurTable, SchurType, e_basis, elementary, elementary_tilde,
                    expand_in_schur, h_basis, homogeneous, homogeneous_tilde,
                    operator_string, power_sum_basis, schur)
from .operators import (apply_string, bernstein_B, bernstein_Bbar, bernstein_C,
                        bernstein_Cbar, mode_K, mode_L, omega, phi, rho)
from .pieri import (oracle_product, pieri_e_I, pieri_e_Istar, pieri_h_Istar,
                    pieri_theta_I)
from .superalgebra import SuperPolynomial, render, scalar_product, theta, x
from .superpartitions import SuperPartition, enumerate_superpartitions, parse

__version__ = "0.1.0"

__all__ = [
    "SchurTable", "SchurType", "SuperPartition", "SuperPolynomial", "apply_string",
    "bernstein_B", "bernstein_Bbar", "bernstein_C", "bernstein_Cbar", "e_basis",
    "elementary", "elementary_tilde", "enumerate_superpartitions", "expand_in_schur",
    "h_basis", "homogeneous", "homogeneous_tilde", "mode_K", "mode_L", "omega",
    "operator_string", "oracle_product", "parse", "phi", "pieri_e_I", "pieri_e_Istar",
    "pieri_h_Istar", "pieri_theta_I", "power_sum_basis", "render", "rho",
    "scalar_product", "schur", "theta", "x",
]
