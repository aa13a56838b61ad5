"""Square (0,1)-matrices stored as Python-int bit vectors.

Row ``i`` is an int whose bit ``j`` is entry ``(i, j)``; the column vectors are
kept alongside so a product entry is a single AND of a row of the left factor
with a column of the right factor. Indices are 0-based here; the graph layer
maps vertex ``v`` to index ``v - 1``.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import DimensionError

__all__ = [
    "BitMatrix",
    "booleanize",
    "bool_product",
    "bool_power",
    "is_all_ones",
    "is_zero",
    "transpose_bits",
]


def transpose_bits(n: int, vectors: Sequence[int]) -> tuple[int, ...]:
    """Transpose ``n`` bit vectors of width ``n``."""
    if n == 0:
        return ()
    nbytes = (n + 7) // 8
    buf = b"".join(v.to_bytes(nbytes, "little") for v in vectors)
    dense = np.unpackbits(
        np.frombuffer(buf, dtype=np.uint8).reshape(n, nbytes), axis=1, bitorder="little"
    )[:, :n]
    packed = np.packbits(np.ascontiguousarray(dense.T), axis=1, bitorder="little")
    return tuple(int.from_bytes(packed[i].tobytes(), "little") for i in range(n))


class BitMatrix:
    """Immutable n x n boolean matrix with row and column bit vectors."""

    __slots__ = ("n", "rows", "cols")

    def __init__(self, n: int, rows: Iterable[int], cols: Iterable[int] | None = None):
        rows = tuple(rows)
        if n < 0 or len(rows) != n:
            raise DimensionError(f"expected {n} rows, got {len(rows)}")
        mask = (1 << n) - 1
        for r in rows:
            if r < 0 or r & ~mask:
                raise DimensionError("row vector has bits outside the matrix width")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(
            self, "cols", transpose_bits(n, rows) if cols is None else tuple(cols)
        )

    def __setattr__(self, name, value):
        raise AttributeError("BitMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        rows = tuple(1 << i for i in range(n))
        return cls(n, rows, rows)

    @classmethod
    def zeros(cls, n: int) -> BitMatrix:
        rows = (0,) * n
        return cls(n, rows, rows)

    @classmethod
    def ones(cls, n: int) -> BitMatrix:
        rows = ((1 << n) - 1,) * n
        return cls(n, rows, rows)

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> BitMatrix:
        """Build from a square list of 0/1 entries; anything else is rejected."""
        n = len(entries)
        rows = []
        for i, row in enumerate(entries):
            if len(row) != n:
                raise DimensionError(f"row {i} has length {len(row)}, expected {n}")
            bits = 0
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise DimensionError(f"entry ({i},{j}) = {x!r} is not 0 or 1")
                if x:
                    bits |= 1 << j
            rows.append(bits)
        return cls(n, rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n)] for r in self.rows]

    def popcount(self) -> int:
        return sum(r.bit_count() for r in self.rows)

    def __eq__(self, other):
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __matmul__(self, other: BitMatrix) -> BitMatrix:
        return bool_product(self, other)

    def __repr__(self):
        body = "; ".join(format(r, f"0{self.n}b")[::-1] for r in self.rows)
        return f"BitMatrix({self.n}, [{body}])"


def booleanize(m: Sequence[Sequence[int]]) -> BitMatrix:
    """Map every nonzero entry of a square integer matrix to 1."""
    n = len(m)
    rows = []
    for i, row in enumerate(m):
        if len(row) != n:
            raise DimensionError(f"matrix is not square: row {i} has length {len(row)}, expected {n}")
        bits = 0
        for j, x in enumerate(row):
            if x:
                bits |= 1 << j
        rows.append(bits)
    return BitMatrix(n, rows)


def bool_product(x: BitMatrix, y: BitMatrix) -> BitMatrix:
    """Booleanized product: entry (i, j) is 1 iff row i of x AND column j of y is nonzero."""
    if x.n != y.n:
        raise DimensionError(f"dimension mismatch: {x.n} vs {y.n}")
    n = x.n
    ycols = y.cols
    bits = [1 << j for j in range(n)]
    rows = []
    for r in x.rows:
        if r:
            rows.append(sum([b for b, c in zip(bits, ycols) if r & c]))
        else:
            rows.append(0)
    return BitMatrix(n, rows)


def bool_power(a: BitMatrix, k: int) -> BitMatrix:
    """Booleanized k-th power by repeated squaring; k = 0 gives the identity."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    result = None
    base = a
    while k:
        if k & 1:
            result = base if result is None else bool_product(result, base)
        k >>= 1
        if k:
            base = bool_product(base, base)
    return BitMatrix.identity(a.n) if result is None else result


def is_all_ones(x: BitMatrix) -> bool:
    full = (1 << x.n) - 1
    return all(r == full for r in x.rows)


def is_zero(x: BitMatrix) -> bool:
    return not any(x.rows)
