"""
Absolute tolerances shared by every numerical comparison of the package.

`algebraic` is used for exact identities (traces, Hermiticity, products of
Pauli matrices), `spectral` for results that go through an eigendecomposition.
"""
from contextlib import contextmanager
from typing import Iterator, NamedTuple, Optional


class Tolerances(NamedTuple):
    algebraic: float = 1e-10
    spectral: float = 1e-8


_tolerances = Tolerances()


def get_tolerances() -> Tolerances:
    return _tolerances


def set_tolerances(algebraic: Optional[float] = None,
                   spectral: Optional[float] = None) -> Tolerances:
    """Replace the global defaults. Returns the previous value."""
    global _tolerances  # pylint: disable=global-statement
    previous = _tolerances
    new = previous._replace(
        **{key: value for key, value in (('algebraic', algebraic), ('spectral', spectral))
           if value is not None})
    for key, value in new._asdict().items():
        if not value > 0:
            raise ValueError(f"Tolerance '{key}' should be positive. Got {value}")
    _tolerances = new
    return previous


@contextmanager
def tolerances(algebraic: Optional[float] = None,
               spectral: Optional[float] = None) -> Iterator[Tolerances]:
    """Temporarily override the tolerances.
    ```
    with tolerances(algebraic=1e-6):
        ...
    ```
    """
    previous = set_tolerances(algebraic=algebraic, spectral=spectral)
    try:
        yield _tolerances
    finally:
        set_tolerances(*previous)


def atol_or_default(atol: Optional[float] = None, spectral: bool = False) -> float:
    if atol is not None:
        return atol
    return _tolerances.spectral if spectral else _tolerances.algebraic
