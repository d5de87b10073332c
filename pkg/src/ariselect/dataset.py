"""Immutable categorical datasets with labels, CSV ingestion, and sampling.

A :class:`CategoricalDataset` stores an ``m x n`` table of dense integer
category codes plus an ``m``-vector of label codes.  Codes index into
per-column domains that remember the raw string values, so every cell can be
decoded back to the value that produced it.  Category values are never
treated as numbers: ``1 - 3`` on codes is meaningless and nothing in this
package does arithmetic on them.

Datasets are frozen after construction (the arrays are marked read-only),
which makes them safe to share across concurrent scorers.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import (
    EmptyFileError,
    MissingValueError,
    RaggedRowError,
    SizeOutOfRangeError,
)

FeatureId = int
"""Index of a feature column, in ``[0, n_features)``."""


@dataclass(frozen=True, eq=False)
class CategoricalDataset:
    """An ``m x n`` table of category codes with one label code per row.

    Attributes:
        instances: int64 array of shape ``(m, n)``; ``instances[r, i]`` is a
            code in ``[0, len(feature_domains[i]))``.
        labels: int64 array of shape ``(m,)`` with codes into ``label_domain``.
        feature_names: display name per column.
        feature_domains: per-column ordered tuple of raw values; position
            defines the code-to-value mapping.
        label_domain: ordered tuple of raw label values.
        label_name: display name of the label column (used when writing CSV).
    """

    instances: np.ndarray
    labels: np.ndarray
    feature_names: tuple[str, ...]
    feature_domains: tuple[tuple[str, ...], ...]
    label_domain: tuple[str, ...]
    label_name: str = field(default="label")

    def __post_init__(self) -> None:
        instances = np.ascontiguousarray(self.instances, dtype=np.int64)
        labels = np.ascontiguousarray(self.labels, dtype=np.int64)
        if instances.ndim != 2:
            raise ValueError("instances must be a 2-D array")
        if labels.ndim != 1:
            raise ValueError("labels must be a 1-D array")
        m, n = instances.shape
        if m < 1 or n < 1:
            raise ValueError("dataset needs at least one row and one feature")
        if labels.shape[0] != m:
            raise ValueError("labels length must match the number of rows")
        if len(self.feature_names) != n or len(self.feature_domains) != n:
            raise ValueError("feature_names and feature_domains must have one entry per column")
        for i, domain in enumerate(self.feature_domains):
            column = instances[:, i]
            if column.min() < 0 or column.max() >= len(domain):
                raise ValueError(f"feature {i} has codes outside its domain of size {len(domain)}")
        if labels.min() < 0 or labels.max() >= len(self.label_domain):
            raise ValueError("label codes outside the label domain")
        instances.setflags(write=False)
        labels.setflags(write=False)
        object.__setattr__(self, "instances", instances)
        object.__setattr__(self, "labels", labels)

    @property
    def n_rows(self) -> int:
        return self.instances.shape[0]

    @property
    def n_features(self) -> int:
        return self.instances.shape[1]

    def __len__(self) -> int:
        return self.n_rows

    def decode_value(self, feature: FeatureId, code: int) -> str:
        """Raw value behind ``code`` in column ``feature``."""
        return self.feature_domains[feature][code]

    def decode_label(self, code: int) -> str:
        """Raw value behind a label code."""
        return self.label_domain[code]


def _encode_column(raw: list[str]) -> tuple[np.ndarray, tuple[str, ...]]:
    """Map raw strings to dense codes in first-appearance order."""
    domain: dict[str, int] = {}
    codes = np.empty(len(raw), dtype=np.int64)
    for r, value in enumerate(raw):
        code = domain.setdefault(value, len(domain))
        codes[r] = code
    return codes, tuple(domain)


def load_csv(path: str | Path) -> CategoricalDataset:
    """Read a dataset from CSV.

    The first row is a header; the last column is the label; every cell must
    be non-empty.  Category codes are assigned in first-appearance order per
    column, so re-reading the same file yields the same encoding.

    Raises:
        EmptyFileError: no header, no data rows, or fewer than two columns.
        RaggedRowError: a row whose cell count differs from the header.
        MissingValueError: any empty cell.
    """
    path = Path(path)
    with path.open(newline="", encoding="utf-8-sig") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyFileError(f"{path}: file is empty") from None
        if len(header) < 2:
            raise EmptyFileError(f"{path}: need at least one feature column and a label column")
        width = len(header)
        rows: list[list[str]] = []
        for line_no, row in enumerate(reader, start=2):
            if len(row) != width:
                raise RaggedRowError(f"{path}:{line_no}: expected {width} cells, found {len(row)}")
            if any(cell == "" for cell in row):
                raise MissingValueError(f"{path}:{line_no}: empty cell")
            rows.append(row)
    if not rows:
        raise EmptyFileError(f"{path}: header but no data rows")

    n = width - 1
    columns = [[row[i] for row in rows] for i in range(width)]
    encoded = [_encode_column(col) for col in columns[:n]]
    label_codes, label_domain = _encode_column(columns[n])
    instances = np.stack([codes for codes, _ in encoded], axis=1)
    return CategoricalDataset(
        instances=instances,
        labels=label_codes,
        feature_names=tuple(header[:n]),
        feature_domains=tuple(domain for _, domain in encoded),
        label_domain=label_domain,
        label_name=header[n],
    )


def write_csv(ds: CategoricalDataset, path: str | Path) -> None:
    """Write a dataset as CSV in the exact format :func:`load_csv` consumes."""
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(list(ds.feature_names) + [ds.label_name])
        for r in range(ds.n_rows):
            row = [ds.decode_value(i, ds.instances[r, i]) for i in range(ds.n_features)]
            row.append(ds.decode_label(ds.labels[r]))
            writer.writerow(row)


def observed_values(ds: CategoricalDataset, feature: FeatureId) -> set[int]:
    """Distinct codes appearing in a column; size 1 means zero variance."""
    return set(np.unique(ds.instances[:, feature]).tolist())


def subsample(ds: CategoricalDataset, size: int, seed: int) -> CategoricalDataset:
    """Uniform sample of ``size`` rows without replacement.

    Deterministic for a given seed.  Domains are inherited from the parent,
    so codes keep their meaning under subsampling; ``size == n_rows`` returns
    a row permutation of the original table.
    """
    if not 1 <= size <= ds.n_rows:
        raise SizeOutOfRangeError(f"sample size {size} outside [1, {ds.n_rows}]")
    rng = np.random.default_rng(seed)
    chosen = rng.choice(ds.n_rows, size=size, replace=False)
    return CategoricalDataset(
        instances=ds.instances[chosen],
        labels=ds.labels[chosen],
        feature_names=ds.feature_names,
        feature_domains=ds.feature_domains,
        label_domain=ds.label_domain,
        label_name=ds.label_name,
    )
