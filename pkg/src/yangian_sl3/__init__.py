"""Exact verification engine for the Cartan-Weyl presentation of Y(sl3).

Subpackages are layered bottom-up: scalars and linalg provide exact
arithmetic, rtt builds evaluation representations of the generator matrix,
gauss extracts triangular currents, relations checks the defining identities,
modes handles the graded component algebra, pairing and double cover the
bialgebra pairing and cross relations, rmatrix assembles and tests the
factorized intertwiner.
"""

__version__ = "0.1.0"
