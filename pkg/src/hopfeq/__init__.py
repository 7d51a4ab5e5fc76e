"""Exact verification of Hopf-equation solutions, Hopf functions and Hopf elements."""

from .catalog import example, verify_example
from .frt import build_br, chi_relations
from .hopfcore import AxiomError, make_presented_bialgebra, make_table_bialgebra
from .hopfelement import check_hopf_element, tensor_element
from .kernel import QQ, Verdict, make_field
from .pairing import Pairing, check_hopf_function, r_sigma, sigma_from_r
from .tensorlab import check_equation, endo_from_matrix

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "Pairing",
    "QQ",
    "Verdict",
    "build_br",
    "check_equation",
    "check_hopf_element",
    "check_hopf_function",
    "chi_relations",
    "endo_from_matrix",
    "example",
    "make_field",
    "make_presented_bialgebra",
    "make_table_bialgebra",
    "r_sigma",
    "sigma_from_r",
    "tensor_element",
    "verify_example",
]
