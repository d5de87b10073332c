"""Labeled synthetic datasets built from eight fixed label functions.

Each generator fills an ``n``-dimensional table over category values
``{0, ..., r-1}`` and labels every row with a binary function of its values:

* g1: ``x1 != 0 and (x2 != 0 or x3 != 0)``
* g2: ``x1 != x2`` (xor)
* g3: ``xor(xor(x1, x2), x3)`` with ``xor(a, b) = (a != b)``
* g4: sum of all n values equals 3
* g5: ``(x1 != 0 or x2 != 0 or x3 != 0) and (x4 != 0 or x5 == 0 or x6 != 0)``
* g6: ``x1 != 0 and (x2 != 0 or x3 == 0)``
* g7: sum of the first three values equals 2
* g8: the integer with binary digits ``x1 ... xn`` (x1 most significant) is
  prime; binary ranges only.

Formulas are written with 1-based feature names; column 0 of a generated
dataset is x1.  g5's ``x5 == 0`` literal breaks the pattern of the other
disjuncts but is intentional.  Non-binary ranges keep the ``!= 0`` / ``== 0``
tests as written and use integer category values in the g4/g7 sums.

Datasets come out either as the full enumeration of all ``r^n`` rows (capped,
since the universe grows fast) or as a uniform with-replacement sample of the
universe, which is the regime where the universe dwarfs any affordable sample.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .dataset import CategoricalDataset
from .errors import (
    DimensionTooSmallError,
    EnumerationTooLargeError,
    RangeUnsupportedError,
)

ENUMERATION_CAP_DEFAULT = 2**20
"""Largest universe that full enumeration will materialize."""


def _g1(X: np.ndarray) -> np.ndarray:
    return (X[:, 0] != 0) & ((X[:, 1] != 0) | (X[:, 2] != 0))


def _g2(X: np.ndarray) -> np.ndarray:
    return X[:, 0] != X[:, 1]


def _g3(X: np.ndarray) -> np.ndarray:
    inner = (X[:, 0] != X[:, 1]).astype(np.int64)
    return inner != X[:, 2]


def _g4(X: np.ndarray) -> np.ndarray:
    return X.sum(axis=1) == 3


def _g5(X: np.ndarray) -> np.ndarray:
    left = (X[:, 0] != 0) | (X[:, 1] != 0) | (X[:, 2] != 0)
    right = (X[:, 3] != 0) | (X[:, 4] == 0) | (X[:, 5] != 0)
    return left & right


def _g6(X: np.ndarray) -> np.ndarray:
    return (X[:, 0] != 0) & ((X[:, 1] != 0) | (X[:, 2] == 0))


def _g7(X: np.ndarray) -> np.ndarray:
    return X[:, :3].sum(axis=1) == 2


def _is_prime_scalar(v: int) -> bool:
    if v < 2:
        return False
    if v < 4:
        return True
    if v % 2 == 0:
        return False
    d = 3
    while d * d <= v:
        if v % d == 0:
            return False
        d += 2
    return True


def _prime_mask(values: np.ndarray, max_value: int) -> np.ndarray:
    # Sieve when the value range is small; otherwise test the values present.
    if max_value <= 2**22:
        sieve = np.ones(max_value + 1, dtype=bool)
        sieve[:2] = False
        for p in range(2, int(max_value**0.5) + 1):
            if sieve[p]:
                sieve[p * p :: p] = False
        return sieve[values]
    unique, inverse = np.unique(values, return_inverse=True)
    flags = np.fromiter((_is_prime_scalar(int(v)) for v in unique), dtype=bool, count=len(unique))
    return flags[inverse]


def _g8(X: np.ndarray) -> np.ndarray:
    n = X.shape[1]
    weights = 1 << np.arange(n - 1, -1, -1, dtype=np.int64)
    values = X @ weights
    return _prime_mask(values, int(1 << n) - 1)


_LABELERS: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "g1": _g1,
    "g2": _g2,
    "g3": _g3,
    "g4": _g4,
    "g5": _g5,
    "g6": _g6,
    "g7": _g7,
    "g8": _g8,
}

_MIN_DIMENSION = {"g1": 3, "g2": 2, "g3": 3, "g4": 1, "g5": 6, "g6": 3, "g7": 3, "g8": 1}

FUNCTION_IDS = tuple(sorted(_LABELERS))


@dataclass(frozen=True)
class SyntheticSpec:
    """Generator configuration.

    ``sample_size=None`` asks for the full enumeration of all ``r^n`` rows;
    otherwise ``sample_size`` rows are drawn uniformly with replacement from
    the universe using ``seed``.
    """

    function: str
    dimension: int = 10
    range_size: int = 2
    sample_size: int | None = None
    seed: int = field(default=0)

    def __post_init__(self) -> None:
        if self.function not in _LABELERS:
            raise ValueError(f"unknown function {self.function!r}; expected one of {FUNCTION_IDS}")
        if self.dimension < _MIN_DIMENSION[self.function]:
            raise DimensionTooSmallError(
                f"{self.function} needs dimension >= {_MIN_DIMENSION[self.function]}, got {self.dimension}"
            )
        if self.range_size < 2:
            raise ValueError(f"range_size must be >= 2, got {self.range_size}")
        if self.function == "g8" and self.range_size != 2:
            raise RangeUnsupportedError("g8 interprets rows as binary digits; range must be 2")
        if self.sample_size is not None and self.sample_size < 1:
            raise ValueError(f"sample_size must be >= 1, got {self.sample_size}")

    @property
    def universe_size(self) -> int:
        return self.range_size**self.dimension


def label(spec: SyntheticSpec, x: Sequence[int]) -> int:
    """Label of a single row under the configured function; 0 or 1."""
    row = np.asarray(x, dtype=np.int64)
    if row.ndim != 1 or row.shape[0] != spec.dimension:
        raise ValueError(f"row must have {spec.dimension} values")
    if row.min() < 0 or row.max() >= spec.range_size:
        raise ValueError(f"row values must lie in [0, {spec.range_size})")
    return int(_LABELERS[spec.function](row[np.newaxis, :])[0])


def _enumerate_universe(spec: SyntheticSpec) -> np.ndarray:
    counts = np.arange(spec.universe_size, dtype=np.int64)
    divisors = spec.range_size ** np.arange(spec.dimension - 1, -1, -1, dtype=np.int64)
    return (counts[:, np.newaxis] // divisors) % spec.range_size


def generate(
    spec: SyntheticSpec, enumeration_cap: int = ENUMERATION_CAP_DEFAULT
) -> CategoricalDataset:
    """Materialize the dataset a spec describes.

    Full enumeration yields every row of the universe exactly once, x1 as the
    most significant digit of the row's rank.  Sample mode draws rows i.i.d.
    uniformly, deterministic for a given seed.
    """
    if spec.sample_size is None:
        if spec.universe_size > enumeration_cap:
            raise EnumerationTooLargeError(
                f"universe has {spec.universe_size} rows, above the cap of {enumeration_cap}"
            )
        instances = _enumerate_universe(spec)
    else:
        rng = np.random.default_rng(spec.seed)
        instances = rng.integers(
            0, spec.range_size, size=(spec.sample_size, spec.dimension), dtype=np.int64
        )
    labels = _LABELERS[spec.function](instances).astype(np.int64)
    value_domain = tuple(str(v) for v in range(spec.range_size))
    return CategoricalDataset(
        instances=instances,
        labels=labels,
        feature_names=tuple(f"x{i + 1}" for i in range(spec.dimension)),
        feature_domains=tuple(value_domain for _ in range(spec.dimension)),
        label_domain=("0", "1"),
        label_name="label",
    )
