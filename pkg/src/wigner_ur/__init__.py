"""SU(2) from two root-of-unity quon algebras and the Wigner-Racah calculus in the {J^2, U_r} scheme."""

from .halfint import HalfInt, InputError, Triad
from .linalg import CplxMat
from .sqrtrational import InexactValue, SqrtRational
from .su2core import cg, metric_m, ninej, sixj, threejm
from .urbasis import AlphaLabel, basis_overlap, build_basis, inverse_expansion, mub_check, overlap_coeff, rot_matrix_r
from .wra.symbols import cg_ur, convert_f_fbar, f_r, fbar_orthogonality, fbar_r, metric_alpha
from .wra.recoupling import ninej_identity_suite, sixj_identity_suite
from .wra.tensors import SphericalTensor, tensor_product_ur, tensor_transform, wigner_eckart_ur

__version__ = "0.1.0"

__all__ = [
    "AlphaLabel", "CplxMat", "HalfInt", "InexactValue", "InputError", "SphericalTensor", "SqrtRational", "Triad",
    "basis_overlap", "build_basis", "cg", "cg_ur", "convert_f_fbar", "f_r", "fbar_orthogonality", "fbar_r",
    "inverse_expansion", "metric_alpha", "metric_m", "mub_check", "ninej", "ninej_identity_suite", "overlap_coeff",
    "rot_matrix_r", "sixj", "sixj_identity_suite", "tensor_product_ur", "tensor_transform", "threejm",
    "wigner_eckart_ur",
]
