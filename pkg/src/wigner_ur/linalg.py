"""Labelled dense complex matrices with tolerance-aware comparisons."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

DEFAULT_TOL = 1e-12


def default_tol() -> float:
    """Global default tolerance, overridable with the WIGNER_UR_TOL env var."""
    raw = os.environ.get("WIGNER_UR_TOL")
    if raw:
        try:
            value = float(raw)
        except ValueError:
            raise ValueError(f"WIGNER_UR_TOL is not a number: {raw!r}") from None
        if value < 0:
            raise ValueError("WIGNER_UR_TOL must be nonnegative")
        return value
    return DEFAULT_TOL


def max_abs(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


@dataclass(frozen=True, eq=False)
class CplxMat:
    """Complex matrix whose rows and columns carry basis labels.

    ``data`` is stored read-only. Products and sums keep labels when the inner
    labels agree; comparisons use ``tol`` unless one is passed explicitly.
    """

    data: np.ndarray
    rows: tuple = ()
    cols: tuple = ()
    tol: float = field(default_factory=default_tol)

    def __post_init__(self):
        arr = np.array(self.data, dtype=complex)
        if arr.ndim != 2:
            raise ValueError("CplxMat needs a 2-d array")
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)
        rows = tuple(self.rows) or tuple(range(arr.shape[0]))
        cols = tuple(self.cols) or tuple(range(arr.shape[1]))
        if len(rows) != arr.shape[0] or len(cols) != arr.shape[1]:
            raise ValueError("label count does not match matrix shape")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @classmethod
    def square(cls, data, labels: Sequence[Any], tol: float | None = None) -> "CplxMat":
        labels = tuple(labels)
        return cls(data, labels, labels, default_tol() if tol is None else tol)

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __array__(self, dtype=None, copy=None):
        return self.data if dtype is None else self.data.astype(dtype)

    def _wrap(self, data, rows, cols) -> "CplxMat":
        return CplxMat(data, rows, cols, self.tol)

    def dag(self) -> "CplxMat":
        return self._wrap(self.data.conj().T, self.cols, self.rows)

    def __matmul__(self, other):
        if isinstance(other, CplxMat):
            return self._wrap(self.data @ other.data, self.rows, other.cols)
        return self.data @ np.asarray(other)

    def __add__(self, other: "CplxMat") -> "CplxMat":
        return self._wrap(self.data + np.asarray(other), self.rows, self.cols)

    def __sub__(self, other: "CplxMat") -> "CplxMat":
        return self._wrap(self.data - np.asarray(other), self.rows, self.cols)

    def __mul__(self, scalar) -> "CplxMat":
        return self._wrap(self.data * scalar, self.rows, self.cols)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CplxMat":
        return self._wrap(np.linalg.matrix_power(self.data, n), self.rows, self.cols)

    def entry(self, row_label, col_label) -> complex:
        return complex(self.data[self.rows.index(row_label), self.cols.index(col_label)])

    def deviation(self, other) -> float:
        return max_abs(self.data - np.asarray(other))

    def allclose(self, other, tol: float | None = None) -> bool:
        tol = self.tol if tol is None else tol
        return self.deviation(other) <= tol

    def is_unitary(self, tol: float | None = None) -> bool:
        n = self.shape[0]
        return self.shape[0] == self.shape[1] and max_abs(
            self.data.conj().T @ self.data - np.eye(n)
        ) <= (self.tol if tol is None else tol)

    def is_hermitian(self, tol: float | None = None) -> bool:
        return self.allclose(self.data.conj().T, tol)

    def restrict(self, labels: Sequence[Any]) -> "CplxMat":
        """Sub-block on the listed labels (rows and columns)."""
        ri = [self.rows.index(x) for x in labels]
        ci = [self.cols.index(x) for x in labels]
        return self._wrap(self.data[np.ix_(ri, ci)], tuple(labels), tuple(labels))
