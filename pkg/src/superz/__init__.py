"""Exact computations with the Lie superalgebras D(2,1;alpha), G(3) and F(4):
centralizers of nilpotent even elements, their centres, ad-h gradings and
labelled Dynkin diagrams."""

from .builders import get_algebra
from .orbits import catalog, get_case

__version__ = "0.1.0"
__all__ = ["get_algebra", "catalog", "get_case", "__version__"]
