from .pauli_string import (PauliString, PauliParseError, parse_pauli, format_pauli, multiply,  # noqa
                           product, commutes, to_matrix, single_qubit_operator)
