"""Exact lambda-bracket calculus and Hamiltonian reduction for classical
affine, finite, and fractional W-superalgebras."""

from .scalar import Scalar
from .diffpoly import DiffPoly, GenSpace, parse_poly, render_poly
from .lambdabracket import BaseBracket, LambdaPoly, lambda_bracket
from .superalgebra import LieSuperalgebra, builtin, load_algebra

__all__ = [
    "Scalar",
    "DiffPoly",
    "GenSpace",
    "parse_poly",
    "render_poly",
    "BaseBracket",
    "LambdaPoly",
    "lambda_bracket",
    "LieSuperalgebra",
    "builtin",
    "load_algebra",
]

__version__ = "0.1.0"
