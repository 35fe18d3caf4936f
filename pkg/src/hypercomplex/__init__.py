"""Quaternionic and octonionic quantum-mechanics toolkit.

Submodules:

``algebra``    quaternion and octonion arithmetic
``clifford``   the Clifford algebra C7 and its minimal ideals
``omodule``    octonionic vectors and the expansion obstruction
``qmodule``    quaternionic Hilbert modules and the complex embedding
``spectral``   anti-Hermitian eigensystems, energy and position grids
``dynamics``   evolution, optical potential, Lee-Friedrichs survival
``fock``       tensor factorization and the one-particle Fock sector
``cli``        the ``hypercomplex`` verification driver
"""

from . import algebra, clifford, dynamics, errors, fock, omodule, qmodule, spectral
from .algebra import Octonion, Quaternion, rephase_to_standard, symplectic_split
from .errors import HypercomplexError
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "HypercomplexError",
    "Octonion",
    "Quaternion",
    "algebra",
    "clifford",
    "dynamics",
    "errors",
    "fock",
    "omodule",
    "qmodule",
    "rephase_to_standard",
    "spectral",
    "symplectic_split",
]
