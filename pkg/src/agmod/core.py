"""Modular groupoids ``Z_n(t, u)`` with ``a * b = (t*a + u*b) mod n``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

MIN_ORDER = 3


def _table_dtype(n: int) -> type:
    if n <= 256:
        return np.uint8
    if n <= 65536:
        return np.uint16
    return np.int64


@dataclass(frozen=True)
class ModGroupoid:
    """The groupoid on ``{0, ..., n-1}`` with ``a * b = (t*a + u*b) mod n``.

    Build instances with :func:`make_groupoid`, which reduces the
    coefficients; the constructor only validates.
    """

    n: int
    t: int
    u: int

    def __post_init__(self):
        if self.n < MIN_ORDER:
            raise ValueError(f"modulus must be >= {MIN_ORDER}, got {self.n}")
        if not (0 <= self.t < self.n and 0 <= self.u < self.n):
            raise ValueError(
                f"coefficients must be reduced mod {self.n}, got t={self.t}, u={self.u}"
            )

    def __str__(self):
        return f"Z_{self.n}({self.t},{self.u})"

    def __call__(self, a: int, b: int) -> int:
        return apply(self, a, b)

    def op(self, a, b):
        """Vectorised operation on integer arrays; no range checks."""
        return (self.t * np.asarray(a, dtype=np.int64) + self.u * np.asarray(b, dtype=np.int64)) % self.n

    def table(self) -> "CayleyTable":
        return cayley_table(self)


@dataclass(frozen=True, eq=False)
class CayleyTable:
    """An ``n x n`` operation table, ``entries[a, b] == a * b``.

    ``entries`` is a read-only numpy array. ``source`` is the generating
    groupoid when the table came from one, ``None`` for imported tables.
    """

    entries: np.ndarray
    source: ModGroupoid | None = None

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, ab):
        return int(self.entries[ab])

    def __eq__(self, other):
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    def __hash__(self):
        return hash(self.entries.tobytes())

    def rows(self) -> list[list[int]]:
        return self.entries.tolist()

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "CayleyTable":
        """Validate and wrap an arbitrary square table of residues."""
        n = len(rows)
        if n == 0:
            raise ValueError("empty table")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"table is not square: row {i} has {len(row)} entries, expected {n}")
            for v in row:
                if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                    raise ValueError(f"non-integer entry {v!r} in row {i}")
                if not 0 <= v < n:
                    raise ValueError(f"entry {v} in row {i} outside [0, {n})")
        entries = np.array(rows, dtype=_table_dtype(n))
        entries.setflags(write=False)
        return cls(entries)


def make_groupoid(n: int, t: int, u: int) -> ModGroupoid:
    """Return ``Z_n(t mod n, u mod n)``; raises ``ValueError`` for ``n < 3``."""
    if n < MIN_ORDER:
        raise ValueError(f"modulus must be >= {MIN_ORDER}, got {n}")
    return ModGroupoid(n, t % n, u % n)


def apply(G: ModGroupoid, a: int, b: int) -> int:
    if not (0 <= a < G.n and 0 <= b < G.n):
        raise ValueError(f"operands ({a}, {b}) outside Z_{G.n}")
    return (G.t * a + G.u * b) % G.n


def cayley_table(G: ModGroupoid) -> CayleyTable:
    n = G.n
    x = np.arange(n, dtype=np.int64)
    entries = ((G.t * x)[:, None] + (G.u * x)[None, :]) % n
    entries = entries.astype(_table_dtype(n))
    entries.setflags(write=False)
    return CayleyTable(entries, G)
