"""Chunked enumeration of all maps from a finite index set into a group."""
from __future__ import annotations

import os

import numpy as np

from ..group import FiniteAbelianGroup

DEFAULT_BUDGET = 10**8
BUDGET_ENV = "SIGNEDTUTTE_BUDGET"
CHUNK = 1 << 15


class BudgetExceeded(RuntimeError):
    pass


def budget_limit(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


def check_budget(candidates: int, budget: int | None = None) -> None:
    limit = budget_limit(budget)
    if candidates > limit:
        raise BudgetExceeded(
            f"{candidates} candidates exceed the enumeration budget {limit} "
            f"(raise it with --budget or {BUDGET_ENV})"
        )


def assignment_chunks(group: FiniteAbelianGroup, m: int, budget: int | None = None):
    """Yield ``(codes, residues)`` covering all of G^m.

    ``codes`` has shape (N,) and encodes the assignment in base |G| (position 0
    most significant); ``residues`` has shape (N, m, rank).
    """
    size = group.order
    total = size ** m
    check_budget(total, budget)
    table = group.element_table
    powers = size ** np.arange(m - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, CHUNK):
        codes = np.arange(start, min(total, start + CHUNK), dtype=np.int64)
        idx = (codes[:, None] // powers[None, :]) % size
        yield codes, table[idx]


def encode(group: FiniteAbelianGroup, residues: np.ndarray) -> np.ndarray:
    """Inverse of the code used by :func:`assignment_chunks` for (N, m, rank) residues."""
    idx = np.zeros(residues.shape[:2], dtype=np.int64)
    for i, n in enumerate(group.moduli):
        idx = idx * n + residues[:, :, i] % n
    size = group.order
    codes = np.zeros(residues.shape[0], dtype=np.int64)
    for j in range(residues.shape[1]):
        codes = codes * size + idx[:, j]
    return codes


def combine(residues: np.ndarray, matrix: np.ndarray, group: FiniteAbelianGroup) -> np.ndarray:
    """Apply an integer matrix (rows x m) to (N, m, rank) residues, reduced mod the group."""
    out = np.einsum("nmk,rm->nrk", residues, np.asarray(matrix, dtype=np.int64))
    return out % group.moduli_array if group.moduli else out


def all_zero(values: np.ndarray) -> np.ndarray:
    """(N, r, rank) -> (N,) True where every entry is zero."""
    return ~values.reshape(values.shape[0], -1).any(axis=1)


def nowhere_zero(residues: np.ndarray) -> np.ndarray:
    """(N, m, rank) -> (N,) True where no position holds the zero element."""
    if residues.shape[2] == 0:
        return np.full(residues.shape[0], residues.shape[1] == 0)
    return residues.any(axis=2).all(axis=1)


def in_two_g(values: np.ndarray, group: FiniteAbelianGroup) -> np.ndarray:
    """(N, r, rank) -> (N, r) membership of each entry in 2G."""
    if not group.moduli:
        return np.ones(values.shape[:2], dtype=bool)
    return ~(values % group.parity_moduli_array).any(axis=2)
