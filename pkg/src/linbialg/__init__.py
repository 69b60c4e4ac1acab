"""Exact linear bialgebra: bimatrices, bivector spaces, bicodes and bimodels."""

from importlib.metadata import PackageNotFoundError, version

from .bicode import Bicode, bicode_from_generator, bicode_from_parity, cyclic_bicode, pseudo_decode
from .bimatrix import Bimatrix, Bipolynomial, Bivector
from .bispace import InnerBiproduct, gram_schmidt_biorthogonalize
from .errors import BialgebraError, ParseError
from .matrix import Matrix
from .operations import OPERATIONS, run_operation
from .poly import Poly
from .scalars import FUZZY, GF, NEUTROSOPHIC, RATIONAL, Fuzzy, Neutro, gf

try:
    __version__ = version("linbialg")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "Bicode", "BialgebraError", "Bimatrix", "Bipolynomial", "Bivector", "FUZZY", "Fuzzy", "GF",
    "InnerBiproduct", "Matrix", "NEUTROSOPHIC", "Neutro", "OPERATIONS", "ParseError", "Poly",
    "RATIONAL", "bicode_from_generator", "bicode_from_parity", "cyclic_bicode", "gf",
    "gram_schmidt_biorthogonalize", "pseudo_decode", "run_operation", "__version__",
]
