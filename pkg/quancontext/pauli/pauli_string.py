"""
n-qubit Pauli strings with exact phase bookkeeping.

A `PauliString` is `i**phase * P_0 (x) ... (x) P_{n-1}` where each letter
`P_j` is one of the Hermitian matrices 1, X, Y, Z encoded by `(x_j, z_j)`:

    (0, 0) -> 1,  (1, 0) -> X,  (0, 1) -> Z,  (1, 1) -> Y = i X Z

Text form: an optional prefix in {"", "+", "-", "i", "+i", "-i"} followed by
one character per qubit, e.g. "Z1", "-YY", "iXZ".
"""
from __future__ import annotations
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Tuple

import numpy as np

from ..linalg import ComplexMatrix, tensor_all

LETTERS = {'1': (0, 0), 'I': (0, 0), 'X': (1, 0), 'Z': (0, 1), 'Y': (1, 1)}
CANONICAL_LETTERS = {(0, 0): '1', (1, 0): 'X', (0, 1): 'Z', (1, 1): 'Y'}
PREFIXES = {'': 0, '+': 0, 'i': 1, '+i': 1, '-': 2, '-i': 3}
CANONICAL_PREFIXES = {0: '', 1: 'i', 2: '-', 3: '-i'}

SINGLE_QUBIT = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
}


class PauliParseError(ValueError):
    """Raised for malformed Pauli text. `position` is 1-based."""

    def __init__(self, text: str, position: int, reason: str = "unknown character"):
        self.text = text
        self.position = position
        super().__init__(f"Cannot parse Pauli string '{text}': {reason} at position {position}")


@dataclass(frozen=True)
class PauliString:
    x_bits: Tuple[int, ...]
    z_bits: Tuple[int, ...]
    phase: int = 0  # exponent k of the i**k prefactor

    def __post_init__(self):
        if len(self.x_bits) != len(self.z_bits):
            raise ValueError("x_bits and z_bits should have the same length")
        if len(self.x_bits) == 0:
            raise ValueError("A Pauli string acts on at least one qubit")
        object.__setattr__(self, 'x_bits', tuple(int(b) & 1 for b in self.x_bits))
        object.__setattr__(self, 'z_bits', tuple(int(b) & 1 for b in self.z_bits))
        object.__setattr__(self, 'phase', int(self.phase) % 4)

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls((0,) * n, (0,) * n)

    @property
    def n(self) -> int:
        return len(self.x_bits)

    @property
    def coefficient(self) -> complex:
        return 1j ** self.phase

    @property
    def is_hermitian(self) -> bool:
        return self.phase in (0, 2)

    @property
    def sign(self) -> int:
        """+1 or -1 for Hermitian strings."""
        if not self.is_hermitian:
            raise ValueError(f"{self} has an imaginary phase")
        return 1 if self.phase == 0 else -1

    @property
    def is_identity(self) -> bool:
        return not any(self.x_bits) and not any(self.z_bits)

    @property
    def letters(self) -> str:
        return ''.join(CANONICAL_LETTERS[x, z] for x, z in zip(self.x_bits, self.z_bits))

    def unsigned(self) -> PauliString:
        return PauliString(self.x_bits, self.z_bits)

    def __mul__(self, other: PauliString) -> PauliString:
        if not isinstance(other, PauliString):
            return NotImplemented
        return multiply(self, other)

    def __neg__(self) -> PauliString:
        return PauliString(self.x_bits, self.z_bits, self.phase + 2)

    def __str__(self):
        return format_pauli(self)

    def __repr__(self):
        return f"PauliString('{format_pauli(self)}')"


def parse_pauli(text: str) -> PauliString:
    """ "Z1" -> Z (x) 1, "-iY" -> -i Y. Accepts the unicode minus sign. """
    source = text
    text = text.strip().replace('−', '-')
    body_start = 0
    while body_start < len(text) and text[body_start] in '+-i':
        body_start += 1
    prefix, body = text[:body_start], text[body_start:]
    if prefix not in PREFIXES:
        raise PauliParseError(source, 1, f"invalid prefix '{prefix}'")
    if not body:
        raise PauliParseError(source, len(text) + 1, "missing Pauli letters")

    x_bits, z_bits = [], []
    for index, char in enumerate(body):
        if char not in LETTERS:
            raise PauliParseError(source, body_start + index + 1)
        x, z = LETTERS[char]
        x_bits.append(x)
        z_bits.append(z)
    return PauliString(tuple(x_bits), tuple(z_bits), PREFIXES[prefix])


def format_pauli(p: PauliString) -> str:
    return CANONICAL_PREFIXES[p.phase] + p.letters


def _check_same_length(a: PauliString, b: PauliString):
    if a.n != b.n:
        raise ValueError(f"Pauli strings act on different numbers of qubits: {a.n} and {b.n}")


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Exact group product a * b.

    With the letter convention P(x, z) = i**(x z) X**x Z**z, moving Z**z_a past
    X**x_b costs (-1)**(z_a x_b), and re-expressing X**x Z**z as a letter
    costs i**(-x z).
    """
    _check_same_length(a, b)
    xa, za = np.array(a.x_bits), np.array(a.z_bits)
    xb, zb = np.array(b.x_bits), np.array(b.z_bits)
    x, z = xa ^ xb, za ^ zb
    exponent = (a.phase + b.phase
                + int(np.sum(xa * za)) + int(np.sum(xb * zb))
                + 2 * int(np.sum(za * xb))
                - int(np.sum(x * z)))
    return PauliString(tuple(x), tuple(z), exponent)


def product(paulis: Iterable[PauliString]) -> PauliString:
    return reduce(multiply, paulis)


def commutes(a: PauliString, b: PauliString) -> bool:
    """True iff the symplectic product of a and b is even."""
    _check_same_length(a, b)
    symplectic = sum(xa * zb + za * xb for xa, za, xb, zb in zip(a.x_bits, a.z_bits, b.x_bits, b.z_bits))
    return symplectic % 2 == 0


def to_matrix(p: PauliString) -> ComplexMatrix:
    """Dense 2**n realization, phase included."""
    matrix = tensor_all(SINGLE_QUBIT[x, z] for x, z in zip(p.x_bits, p.z_bits))
    return p.coefficient * matrix


def single_qubit_operator(letter: str, qubit: int, n: int) -> PauliString:
    """`letter` on `qubit`, identity elsewhere; e.g. ("X", 1, 3) -> 1X1."""
    if not 0 <= qubit < n:
        raise ValueError(f"Qubit {qubit} out of range for {n} qubits")
    letters = ['1'] * n
    letters[qubit] = letter
    return parse_pauli(''.join(letters))
