"""Exact verifier for the deformed two-photon / Schrodinger algebra.

The package certifies, with residual exactly zero, the Hopf structure and
universal R-matrix of the z-deformed two-photon algebra, the isomorphic
deformed Schrodinger algebra, its deformed one-boson Fock-Bargmann
realization, and the induced discrete-time Schrodinger equation together
with its symmetry operators and exact solution families.
"""

from .scalars import ComplexRational, parse_rational, parse_complex_rational
from .series import TruncatedSeries
from .algebra import (NCElement, TensorElement, QuantumAlgebra,
                      two_photon_algebra, schrodinger_algebra,
                      NormalOrderError, H6_GENERATORS, SCH_GENERATORS)
from .bialgebra import (LieAlgebra, WedgeElement, two_photon_lie,
                        schrodinger_lie, basis_change, cocommutator_from_r,
                        delta_table_from_r, verify_cybe, verify_cocycle)
from .bargmann import (DiffOperator, EigenProblem, classical_rep,
                       deformed_rep, first_order_rep, eigen_operator,
                       series_solve, verify_rep)
from .discrete import (SchrodingerOperator, ExpPolyFunction, realize,
                       discrete_derivative, casimir, verify_realization,
                       symmetry_check, heat_polynomials,
                       exponential_solutions, apply_and_recheck)
from .hopf import (hopf_checks, rmatrix_checks, r_matrix, r_matrix_inverse,
                   transport_structure, verify_spec_equality)
from .report import CheckResult

__version__ = "0.1.0"
