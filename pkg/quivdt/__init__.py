"""
Initialize quivdt package.
"""
__software__ = "Refined DT/BPS Invariants of Symmetric Quivers"
__version__ = "0.4.0"
__author__ = "York <york.jong@gmail.com>"
__date__ = "2026/09/15 (initial version) ~ 2026/10/16 (last revision)"

__all__ = [
    'errors',       # exception hierarchy and exit codes
    'quiver',       # quivers, dimension vectors, Euler form, framing
    'ncalg',        # potentials, cyclic derivatives, trace evaluation
    'jacobi',       # truncated Jacobi algebras and Milnor bases
    'spectrum',     # Hodge spectra and refined GV polynomials
    'fqrep',        # finite fields and exponential sum counts
    'plethys',      # Laurent polynomials, graded series, plethystic Exp/Log
    'dtbps',        # stack series, BPS extraction and checks
    'models',       # example quivers with potential
    'cli',          # command line front end
]

from . import errors
from . import quiver
from . import ncalg
from . import jacobi
from . import spectrum
from . import fqrep
from . import plethys
from . import dtbps
from . import models
from . import cli
