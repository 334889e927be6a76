from .tolerance import Tolerances, get_tolerances, set_tolerances, tolerances  # noqa
from .matrices import (ComplexMatrix, DensityMatrix, UnitaryMatrix, NumericalIntegrityError,  # noqa
                       as_matrix, is_hermitian, is_unitary, matrices_close)
from .operations import (tensor, tensor_all, partial_trace, expectation, apply_unitary,  # noqa
                         apply_kraus, check_kraus_completeness, expm_hermitian, unitary_from_eigh)
from .random_states import random_density_matrix, random_kraus, random_unitary  # noqa
