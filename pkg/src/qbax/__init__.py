"""qbax: exact symbolic and numerical checks for GL_q(2)-type lattice models.

Layers, bottom up:

  coeff      exact Laurent coefficients over Q
  ncpoly     site-indexed noncommutative polynomials with PBW normal forms
  algtext    text format for presentations, maps, and elements
  catalog    the presentations and generator maps, stored as data
  lmatrices  R- and L-matrices, exchange-relation and transfer-matrix checks
  identities named exact identity checks (the registry)
  qdilog     noncompact quantum dilogarithm: quadrature and functional laws
  cyclicrep  finite-dimensional representations at roots of unity
  classical  lattice Hamiltonian densities, continuum limits, zero curvature
  registry   check-suite runner and reports
  cli        command-line entry points
"""

from .coeff import Coefficient, QLM
from .ncpoly import GenMap, NCPoly, Presentation, check_confluence

__all__ = [
    "Coefficient",
    "QLM",
    "GenMap",
    "NCPoly",
    "Presentation",
    "check_confluence",
]

__version__ = "0.1.0"
