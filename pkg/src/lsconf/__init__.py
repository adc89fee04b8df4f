"""lsconf: exact-arithmetic algebra toolkit.

Finite-dimensional algebras with several named bilinear products, given by
rational structure constants; identity checking, cohomology of the induced
quadratic left-symmetric conformal algebras, and simplicity certificates.
"""

__version__ = "0.1.0"
