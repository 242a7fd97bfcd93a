"""GF(2) linear algebra over a fixed edge universe, using int bitsets.

A vector is a subset of the edge ids {0, ..., m-1}, stored as a Python int
with bit i set iff edge i is present; addition is symmetric difference.
Subspaces keep their basis in reduced row echelon form, so two equal
subspaces are structurally equal objects.  Operators are m x m matrices
stored column-wise (column x = image of the singleton {x}).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def _low_bit(x: int) -> int:
    """Index of the lowest set bit of a nonzero int."""
    return (x & -x).bit_length() - 1


def _rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Reduce bitset rows to reduced row echelon form (pivots increasing)."""
    basis: list[int] = []
    for row in rows:
        for b in basis:
            if (row >> _low_bit(b)) & 1:
                row ^= b
        if row:
            for i, b in enumerate(basis):
                if (b >> _low_bit(row)) & 1:
                    basis[i] = b ^ row
            basis.append(row)
    basis.sort(key=_low_bit)
    return tuple(basis)


@dataclass(frozen=True)
class Gf2Vec:
    """An edge subset of {0..m-1} viewed as a GF(2) vector."""

    m: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError("universe size must be nonnegative")
        if self.bits < 0 or self.bits >> self.m:
            raise ValueError("vector has bits outside the universe")

    @classmethod
    def from_edges(cls, m: int, edges: Iterable[int]) -> Gf2Vec:
        bits = 0
        for e in edges:
            if not 0 <= e < m:
                raise ValueError(f"edge {e} out of range for universe {m}")
            bits |= 1 << e
        return cls(m, bits)

    @classmethod
    def singleton(cls, m: int, edge: int) -> Gf2Vec:
        return cls.from_edges(m, (edge,))

    def edges(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.m) if (self.bits >> i) & 1)

    def __contains__(self, edge: int) -> bool:
        return 0 <= edge < self.m and bool((self.bits >> edge) & 1)

    def __add__(self, other: Gf2Vec) -> Gf2Vec:
        """Symmetric difference."""
        if self.m != other.m:
            raise ValueError("universe mismatch")
        return Gf2Vec(self.m, self.bits ^ other.bits)

    def dot(self, other: Gf2Vec) -> int:
        """Bilinear form: parity of the intersection size (0 or 1)."""
        if self.m != other.m:
            raise ValueError("universe mismatch")
        return (self.bits & other.bits).bit_count() & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def __repr__(self) -> str:
        return f"Gf2Vec({self.m}, {{{', '.join(map(str, self.edges()))}}})"


@dataclass(frozen=True)
class Gf2Subspace:
    """A subspace of GF(2)^m with a reduced-row-echelon basis.

    The canonical basis makes equality of subspaces plain dataclass
    equality.  Rows are nonzero, ordered by strictly increasing pivot,
    and every pivot column is zero in all other rows.
    """

    m: int
    rows: tuple[int, ...]

    @classmethod
    def span(cls, m: int, vectors: Iterable[Gf2Vec | int]) -> Gf2Subspace:
        bits = []
        for v in vectors:
            if isinstance(v, Gf2Vec):
                if v.m != m:
                    raise ValueError("universe mismatch")
                bits.append(v.bits)
            else:
                bits.append(v)
        return cls(m, _rref(bits))

    @classmethod
    def zero(cls, m: int) -> Gf2Subspace:
        return cls(m, ())

    @classmethod
    def full(cls, m: int) -> Gf2Subspace:
        return cls(m, tuple(1 << i for i in range(m)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v: Gf2Vec | int) -> bool:
        if isinstance(v, Gf2Vec):
            if v.m != self.m:
                raise ValueError("universe mismatch")
            x = v.bits
        else:
            x = v
        for row in self.rows:
            if (x >> _low_bit(row)) & 1:
                x ^= row
        return x == 0

    def is_subspace_of(self, other: Gf2Subspace) -> bool:
        return all(other.contains(Gf2Vec(self.m, r)) for r in self.rows)

    def basis(self) -> tuple[Gf2Vec, ...]:
        return tuple(Gf2Vec(self.m, r) for r in self.rows)

    def vectors(self) -> Iterator[Gf2Vec]:
        """All 2^dim member vectors (use only for small dimensions)."""
        n = len(self.rows)
        for mask in range(1 << n):
            bits = 0
            for i in range(n):
                if (mask >> i) & 1:
                    bits ^= self.rows[i]
            yield Gf2Vec(self.m, bits)

    def sum(self, other: Gf2Subspace) -> Gf2Subspace:
        if self.m != other.m:
            raise ValueError("universe mismatch")
        return Gf2Subspace(self.m, _rref(self.rows + other.rows))

    def perp(self) -> Gf2Subspace:
        """Orthogonal complement (null space of the basis matrix)."""
        pivots = [_low_bit(r) for r in self.rows]
        pivot_set = set(pivots)
        gens = []
        for c in range(self.m):
            if c in pivot_set:
                continue
            x = 1 << c
            for r, p in zip(self.rows, pivots):
                if (r >> c) & 1:
                    x |= 1 << p
            gens.append(x)
        return Gf2Subspace(self.m, _rref(gens))

    def intersect(self, other: Gf2Subspace) -> Gf2Subspace:
        """Intersection, computed as the complement of the sum of complements."""
        if self.m != other.m:
            raise ValueError("universe mismatch")
        return self.perp().sum(other.perp()).perp()

    def __repr__(self) -> str:
        shown = [format(r, f"0{self.m}b")[::-1] for r in self.rows]
        return f"Gf2Subspace({self.m}, dim={self.dim}, rows={shown})"


@dataclass(frozen=True)
class LinearOp:
    """An m x m matrix over GF(2), stored as columns (images of singletons)."""

    m: int
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.cols) != self.m:
            raise ValueError("operator must have one column per edge")
        for c in self.cols:
            if c < 0 or c >> self.m:
                raise ValueError("column has bits outside the universe")

    @classmethod
    def from_columns(cls, m: int, cols: Iterable[Gf2Vec | int]) -> LinearOp:
        out = []
        for c in cols:
            if isinstance(c, Gf2Vec):
                if c.m != m:
                    raise ValueError("universe mismatch")
                out.append(c.bits)
            else:
                out.append(c)
        return cls(m, tuple(out))

    @classmethod
    def identity(cls, m: int) -> LinearOp:
        return cls(m, tuple(1 << i for i in range(m)))

    @classmethod
    def zero(cls, m: int) -> LinearOp:
        return cls(m, (0,) * m)

    def column(self, x: int) -> Gf2Vec:
        return Gf2Vec(self.m, self.cols[x])

    def apply(self, v: Gf2Vec) -> Gf2Vec:
        if v.m != self.m:
            raise ValueError("universe mismatch")
        bits = 0
        x = v.bits
        while x:
            i = _low_bit(x)
            bits ^= self.cols[i]
            x &= x - 1
        return Gf2Vec(self.m, bits)

    def compose(self, inner: LinearOp) -> LinearOp:
        """self o inner (apply `inner` first)."""
        if inner.m != self.m:
            raise ValueError("universe mismatch")
        return LinearOp(self.m, tuple(self.apply(Gf2Vec(self.m, c)).bits for c in inner.cols))

    def __add__(self, other: LinearOp) -> LinearOp:
        if other.m != self.m:
            raise ValueError("universe mismatch")
        return LinearOp(self.m, tuple(a ^ b for a, b in zip(self.cols, other.cols)))

    def transpose(self) -> LinearOp:
        cols = [0] * self.m
        for j, c in enumerate(self.cols):
            for i in range(self.m):
                if (c >> i) & 1:
                    cols[i] |= 1 << j
        return LinearOp(self.m, tuple(cols))

    def is_symmetric(self) -> bool:
        return self.cols == self.transpose().cols

    def image(self) -> Gf2Subspace:
        return Gf2Subspace(self.m, _rref(self.cols))

    def kernel(self) -> Gf2Subspace:
        """Null space, via column elimination with combination tracking."""
        pivots: dict[int, tuple[int, int]] = {}
        null_rows = []
        for j in range(self.m):
            col, combo = self.cols[j], 1 << j
            while col:
                p = _low_bit(col)
                if p not in pivots:
                    pivots[p] = (col, combo)
                    break
                pcol, pcombo = pivots[p]
                col ^= pcol
                combo ^= pcombo
            else:
                null_rows.append(combo)
        return Gf2Subspace(self.m, _rref(null_rows))

    def __repr__(self) -> str:
        return f"LinearOp({self.m}, rank={self.image().dim})"
