"""Finite abelian groups presented as products of cyclic groups Z_n1 x ... x Z_nk."""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from math import gcd, prod

import numpy as np

Element = tuple[int, ...]


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteAbelianGroup:
    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        moduli = tuple(int(n) for n in self.moduli)
        if any(n < 2 for n in moduli):
            raise GroupError(f"cyclic factors must have order >= 2, got {moduli}")
        object.__setattr__(self, "moduli", moduli)

    @classmethod
    def parse(cls, text: str) -> "FiniteAbelianGroup":
        """Parse ``"Z4xZ2"``-style specs; ``"Z1"`` or ``""`` is the trivial group."""
        text = text.strip()
        if not text:
            return cls(())
        moduli = []
        for part in re.split(r"\s*[x×*]\s*", text, flags=re.IGNORECASE):
            m = re.fullmatch(r"[zZ]_?(\d+)", part.strip())
            if not m:
                raise GroupError(f"cannot parse group factor {part!r} in {text!r}")
            n = int(m.group(1))
            if n == 0:
                raise GroupError("Z0 is infinite")
            if n > 1:
                moduli.append(n)
        return cls(tuple(moduli))

    @classmethod
    def cyclic(cls, n: int) -> "FiniteAbelianGroup":
        return cls(() if n == 1 else (n,))

    def __str__(self):
        return "x".join(f"Z{n}" for n in self.moduli) or "Z1"

    @cached_property
    def order(self) -> int:
        return prod(self.moduli)

    @cached_property
    def two_g_order(self) -> int:
        """|2G|."""
        return prod(n // gcd(2, n) for n in self.moduli)

    def two_g_index(self) -> int:
        return self.two_g_order

    @cached_property
    def two_torsion_order(self) -> int:
        """|G_2| = |{x : 2x = 0}|."""
        return prod(gcd(2, n) for n in self.moduli)

    @property
    def zero(self) -> Element:
        return (0,) * len(self.moduli)

    def _check(self, a: Element):
        if len(a) != len(self.moduli):
            raise GroupError(f"element {a} does not belong to {self}")

    def element(self, residues) -> Element:
        residues = tuple(int(r) for r in residues)
        self._check(residues)
        return tuple(r % n for r, n in zip(residues, self.moduli))

    def add(self, a: Element, b: Element) -> Element:
        self._check(a)
        self._check(b)
        return tuple((x + y) % n for x, y, n in zip(a, b, self.moduli))

    def neg(self, a: Element) -> Element:
        self._check(a)
        return tuple(-x % n for x, n in zip(a, self.moduli))

    def scale(self, c: int, a: Element) -> Element:
        self._check(a)
        return tuple(c * x % n for x, n in zip(a, self.moduli))

    def is_zero(self, a: Element) -> bool:
        return not any(a)

    def in_two_g(self, a: Element) -> bool:
        self._check(a)
        return all(x % gcd(2, n) == 0 for x, n in zip(a, self.moduli))

    def coset_rep_of(self, a: Element) -> Element:
        """Canonical representative of ``a + 2G`` (residue mod 2 in even factors, else 0)."""
        self._check(a)
        return tuple(x % gcd(2, n) for x, n in zip(a, self.moduli))

    def coset_reps(self) -> list[Element]:
        return list(itertools.product(*(range(gcd(2, n)) for n in self.moduli)))

    def elements(self):
        """All elements, lexicographic on residues."""
        return itertools.product(*(range(n) for n in self.moduli))

    @cached_property
    def element_table(self) -> np.ndarray:
        """Residue table of shape (order, rank), rows in :meth:`elements` order."""
        table = np.array(list(self.elements()), dtype=np.int64)
        return table.reshape(self.order, len(self.moduli))

    @cached_property
    def moduli_array(self) -> np.ndarray:
        return np.array(self.moduli, dtype=np.int64)

    @cached_property
    def parity_moduli_array(self) -> np.ndarray:
        return np.array([gcd(2, n) for n in self.moduli], dtype=np.int64)

    def index_of(self, a: Element) -> int:
        self._check(a)
        idx = 0
        for x, n in zip(a, self.moduli):
            idx = idx * n + x % n
        return idx
