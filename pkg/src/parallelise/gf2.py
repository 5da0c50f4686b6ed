"""Exact linear algebra over GF(2).

Rows are packed into Python ints (bit ``j`` of a row word is the entry in
column ``j``), which keeps elimination a sequence of XORs on machine-size
words for the matrix sizes this package deals with.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np


class DimensionError(ValueError):
    """Operand shapes do not fit together."""


class InternalInvariantError(RuntimeError):
    """A guaranteed mathematical property failed; indicates a bug."""


def _pack(bits: Iterable[int]) -> int:
    word = 0
    for j, bit in enumerate(bits):
        if bit not in (0, 1):
            raise ValueError(f"entry {bit!r} at index {j} is not a bit")
        if bit:
            word |= 1 << j
    return word


def _unpack(word: int, length: int) -> tuple[int, ...]:
    return tuple((word >> j) & 1 for j in range(length))


@dataclass(frozen=True)
class Gf2Vector:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        for i, bit in enumerate(self.entries):
            if bit not in (0, 1):
                raise ValueError(f"entry {bit!r} at index {i} is not a bit")

    @classmethod
    def of(cls, bits: Iterable[int]) -> "Gf2Vector":
        return cls(tuple(int(b) for b in bits))

    @classmethod
    def zeros(cls, length: int) -> "Gf2Vector":
        return cls((0,) * length)

    @classmethod
    def ones(cls, length: int) -> "Gf2Vector":
        return cls((1,) * length)

    @classmethod
    def from_word(cls, word: int, length: int) -> "Gf2Vector":
        return cls(_unpack(word, length))

    @property
    def word(self) -> int:
        return _pack(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other: "Gf2Vector") -> "Gf2Vector":
        if len(self) != len(other):
            raise DimensionError(f"cannot add vectors of length {len(self)} and {len(other)}")
        return Gf2Vector(tuple(a ^ b for a, b in zip(self.entries, other.entries)))

    def to_list(self) -> list[int]:
        return list(self.entries)


@dataclass(frozen=True)
class Gf2Matrix:
    """Matrix over GF(2) stored as packed row words.

    Use :meth:`from_rows` or :meth:`from_array` rather than building the
    packed representation by hand.
    """

    nrows: int
    ncols: int
    row_words: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.row_words) != self.nrows:
            raise ValueError(f"expected {self.nrows} row words, got {len(self.row_words)}")
        limit = 1 << self.ncols
        for i, word in enumerate(self.row_words):
            if word < 0 or word >= limit:
                raise ValueError(f"row {i} has bits outside {self.ncols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> "Gf2Matrix":
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        words = []
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionError(f"row {i} has length {len(row)}, expected {ncols}")
            words.append(_pack(int(b) for b in row))
        return cls(len(rows), ncols, tuple(words))

    @classmethod
    def from_array(cls, array) -> "Gf2Matrix":
        arr = np.asarray(array, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionError(f"expected a 2-d array, got shape {arr.shape}")
        return cls.from_rows((arr % 2).tolist(), ncols=arr.shape[1])

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry ({i}, {j}) outside {self.nrows}x{self.ncols} matrix")
        return (self.row_words[i] >> j) & 1

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector.from_word(self.row_words[i], self.ncols)

    def to_rows(self) -> list[list[int]]:
        return [list(_unpack(w, self.ncols)) for w in self.row_words]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_rows(), dtype=np.uint8).reshape(self.nrows, self.ncols)

    def transpose(self) -> "Gf2Matrix":
        return Gf2Matrix.from_rows(
            [[self.entry(i, j) for i in range(self.nrows)] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and self == self.transpose()

    def matvec(self, a: Gf2Vector) -> Gf2Vector:
        if len(a) != self.ncols:
            raise DimensionError(f"vector of length {len(a)} against {self.ncols} columns")
        aw = a.word
        return Gf2Vector(tuple(bin(w & aw).count("1") & 1 for w in self.row_words))


def _eliminate(words: list[int], ncols: int) -> list[int]:
    """Reduce ``words`` in place to reduced row echelon form; return pivot columns.

    Pivots are taken on the lowest available column, with the first row
    (in current order) having that bit set as the pivot row.
    """
    pivots = []
    r = 0
    m = len(words)
    for col in range(ncols):
        bit = 1 << col
        pivot = next((k for k in range(r, m) if words[k] & bit), None)
        if pivot is None:
            continue
        words[r], words[pivot] = words[pivot], words[r]
        prow = words[r]
        for k in range(m):
            if k != r and words[k] & bit:
                words[k] ^= prow
        pivots.append(col)
        r += 1
        if r == m:
            break
    return pivots


def gf2_rank(m: Gf2Matrix) -> int:
    return len(_eliminate(list(m.row_words), m.ncols))


def gf2_solve(m: Gf2Matrix, b: Gf2Vector) -> Optional[Gf2Vector]:
    """Return one solution of ``m @ a == b`` over GF(2), or None if there is none.

    Pivots on the lowest available column and sets every free variable to
    zero, so the answer is a deterministic function of the inputs.

    Raises:
        DimensionError: if ``len(b) != m.nrows``.
    """
    if len(b) != m.nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, matrix has {m.nrows} rows")
    n = m.ncols
    rhs_bit = 1 << n
    words = [w | (rhs_bit if bi else 0) for w, bi in zip(m.row_words, b.entries)]
    pivots = _eliminate(words, n)
    # any remaining row with only the rhs bit set is 0 = 1
    for w in words[len(pivots):]:
        if w == rhs_bit:
            return None
    solution = 0
    for r, col in enumerate(pivots):
        if words[r] & rhs_bit:
            solution |= 1 << col
    return Gf2Vector.from_word(solution, n)


@dataclass(frozen=True)
class LinkingParity:
    """Symmetric square matrix over GF(2) with every diagonal entry equal to 1.

    Off-diagonal entry ``(i, j)`` is the linking number of components ``i``
    and ``j`` reduced mod 2.
    """

    matrix: Gf2Matrix

    def __post_init__(self) -> None:
        m = self.matrix
        if m.nrows != m.ncols:
            raise ValueError(f"linking parity must be square, got {m.nrows}x{m.ncols}")
        for i in range(m.nrows):
            if not m.entry(i, i):
                raise ValueError(f"diagonal entry {i} must be 1")
        if not m.is_symmetric():
            raise ValueError("linking parity must be symmetric")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "LinkingParity":
        return cls(Gf2Matrix.from_rows(rows, ncols=len(rows)))

    @classmethod
    def from_linking_matrix(cls, lk: Sequence[Sequence[int]]) -> "LinkingParity":
        """Reduce an integer linking matrix mod 2 and put ones on the diagonal."""
        n = len(lk)
        return cls.from_rows(
            [[1 if i == j else int(lk[i][j]) % 2 for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_off_diagonal(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "LinkingParity":
        """Build from the set of (i, j) pairs with odd linking."""
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j in pairs:
            if i == j:
                raise ValueError("pairs must be off-diagonal")
            rows[i][j] = rows[j][i] = 1
        return cls.from_rows(rows)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "LinkingParity":
        upper = np.triu(rng.integers(0, 2, size=(n, n)), k=1)
        full = upper + upper.T + np.eye(n, dtype=np.int64)
        return cls(Gf2Matrix.from_array(full))

    @property
    def n(self) -> int:
        return self.matrix.nrows

    def lk(self, i: int, j: int) -> int:
        return self.matrix.entry(i, j)

    def to_rows(self) -> list[list[int]]:
        return self.matrix.to_rows()


def solve_framing_system(lp: LinkingParity) -> Gf2Vector:
    """Solve ``L a = 1`` for a linking parity matrix ``L``.

    A solution always exists for symmetric ``L`` with unit diagonal, so a
    failure here is reported as :class:`InternalInvariantError`.
    """
    a = gf2_solve(lp.matrix, Gf2Vector.ones(lp.n))
    if a is None:
        raise InternalInvariantError(
            f"no solution of L a = 1 for symmetric unit-diagonal L: {lp.to_rows()}"
        )
    return a


def zero_row_subsets(lp: LinkingParity) -> list[int]:
    """All row subsets (as bitmasks over row indices) whose rows sum to zero.

    Exhaustive over the ``2**n`` subsets; meant for small ``n``.
    """
    words = lp.matrix.row_words
    found = []
    for mask in range(1 << lp.n):
        acc = 0
        for i in range(lp.n):
            if (mask >> i) & 1:
                acc ^= words[i]
        if acc == 0:
            found.append(mask)
    return found
