"""Finite ground sets, binary relations as packed bit rows, and permutations.

A relation ``R`` from ``X`` to ``Y`` is a subset of ``Y x X``.  Row ``y`` of
``R.bits`` is an integer whose bit ``x`` is set iff ``(y, x)`` is in ``R``, so
composition is a word-parallel OR of rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DimensionError

__all__ = [
    "GroundSet",
    "Relation",
    "Permutation",
    "compose_rel",
    "opposite_rel",
    "delta_of_permutation",
    "complement_rel",
    "union_rel",
    "is_order",
    "all_relations",
]


@dataclass(frozen=True)
class GroundSet:
    size: int
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("ground set size must be non-negative")
        if self.labels is not None:
            labels = tuple(self.labels)
            object.__setattr__(self, "labels", labels)
            if len(labels) != self.size:
                raise ValueError("need exactly one label per element")
            if len(set(labels)) != len(labels):
                raise ValueError("labels must be unique")

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.size))

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)


def _ground(g) -> GroundSet:
    return g if isinstance(g, GroundSet) else GroundSet(int(g))


@dataclass(frozen=True)
class Relation:
    rows: GroundSet
    cols: GroundSet
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", _ground(self.rows))
        object.__setattr__(self, "cols", _ground(self.cols))
        bits = tuple(self.bits)
        object.__setattr__(self, "bits", bits)
        if len(bits) != self.rows.size:
            raise DimensionError(f"expected {self.rows.size} rows, got {len(bits)}")
        full = (1 << self.cols.size) - 1
        if any(b & ~full for b in bits):
            raise DimensionError("row bits exceed the column count")

    # construction -------------------------------------------------------
    @classmethod
    def from_pairs(cls, rows, cols, pairs: Iterable[tuple[int, int]]) -> "Relation":
        rows, cols = _ground(rows), _ground(cols)
        bits = [0] * rows.size
        for y, x in pairs:
            if not (0 <= y < rows.size and 0 <= x < cols.size):
                raise DimensionError(f"pair {(y, x)} out of range")
            bits[y] |= 1 << x
        return cls(rows, cols, tuple(bits))

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[object]]) -> "Relation":
        n_rows = len(matrix)
        n_cols = len(matrix[0]) if n_rows else 0
        bits = []
        for row in matrix:
            if len(row) != n_cols:
                raise DimensionError("ragged matrix")
            bits.append(sum(1 << j for j, v in enumerate(row) if v))
        return cls(GroundSet(n_rows), GroundSet(n_cols), tuple(bits))

    @classmethod
    def empty(cls, rows, cols=None) -> "Relation":
        rows = _ground(rows)
        cols = rows if cols is None else _ground(cols)
        return cls(rows, cols, (0,) * rows.size)

    @classmethod
    def full(cls, rows, cols=None) -> "Relation":
        rows = _ground(rows)
        cols = rows if cols is None else _ground(cols)
        return cls(rows, cols, ((1 << cols.size) - 1,) * rows.size)

    @classmethod
    def identity(cls, ground) -> "Relation":
        g = _ground(ground)
        return cls(g, g, tuple(1 << i for i in range(g.size)))

    @classmethod
    def diagonal(cls, ground, subset: Iterable[int]) -> "Relation":
        """``Delta_A = {(a, a) | a in A}``."""
        g = _ground(ground)
        bits = [0] * g.size
        for a in subset:
            bits[a] = 1 << a
        return cls(g, g, tuple(bits))

    # queries ------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.rows.size, self.cols.size

    @property
    def is_square(self) -> bool:
        return self.rows.size == self.cols.size

    def __contains__(self, pair: tuple[int, int]) -> bool:
        y, x = pair
        return bool(self.bits[y] >> x & 1)

    def pairs(self) -> list[tuple[int, int]]:
        return [(y, x) for y, b in enumerate(self.bits) for x in range(self.cols.size) if b >> x & 1]

    def __len__(self) -> int:
        return sum(bin(b).count("1") for b in self.bits)

    def issubset(self, other: "Relation") -> bool:
        _same_shape(self, other)
        return all(a & ~b == 0 for a, b in zip(self.bits, other.bits))

    def __le__(self, other: "Relation") -> bool:
        return self.issubset(other)

    def __or__(self, other: "Relation") -> "Relation":
        return union_rel(self, other)

    def __matmul__(self, other: "Relation") -> "Relation":
        return compose_rel(self, other)

    def to_matrix(self) -> list[list[int]]:
        return [[b >> x & 1 for x in range(self.cols.size)] for b in self.bits]

    def __repr__(self) -> str:
        return f"Relation({self.rows.size}x{self.cols.size}, {self.pairs()})"


def _same_shape(a: Relation, b: Relation) -> None:
    if a.shape != b.shape:
        raise DimensionError(f"shape mismatch {a.shape} vs {b.shape}")


def compose_bits(s_bits: Sequence[int], t_bits: Sequence[int]) -> tuple[int, ...]:
    """Row-level composition used in hot loops (no shape checks)."""
    out = []
    for row in s_bits:
        acc = 0
        y = 0
        while row:
            if row & 1:
                acc |= t_bits[y]
            row >>= 1
            y += 1
        out.append(acc)
    return tuple(out)


def compose_rel(s: Relation, t: Relation) -> Relation:
    """``ST = {(z, x) | exists y: (z, y) in S and (y, x) in T}``."""
    if s.cols.size != t.rows.size:
        raise DimensionError(f"cannot compose {s.shape} with {t.shape}")
    return Relation(s.rows, t.cols, compose_bits(s.bits, t.bits))


def opposite_rel(r: Relation) -> Relation:
    bits = [0] * r.cols.size
    for y, row in enumerate(r.bits):
        for x in range(r.cols.size):
            if row >> x & 1:
                bits[x] |= 1 << y
    return Relation(r.cols, r.rows, tuple(bits))


def complement_rel(r: Relation) -> Relation:
    if not r.is_square:
        raise DimensionError("complement is only defined for relations on one set")
    full = (1 << r.cols.size) - 1
    return Relation(r.rows, r.cols, tuple(full & ~b for b in r.bits))


def union_rel(a: Relation, b: Relation) -> Relation:
    _same_shape(a, b)
    return Relation(a.rows, a.cols, tuple(x | y for x, y in zip(a.bits, b.bits)))


def is_order(r: Relation) -> bool:
    """Reflexive, antisymmetric and transitive."""
    if not r.is_square:
        raise DimensionError("an order lives on a single set")
    n = r.rows.size
    bits = r.bits
    for i in range(n):
        if not bits[i] >> i & 1:
            return False
        for j in range(i + 1, n):
            if bits[i] >> j & 1 and bits[j] >> i & 1:
                return False
    # transitive iff R R is contained in R
    return all(c & ~b == 0 for c, b in zip(compose_bits(bits, bits), bits))


def all_relations(n: int) -> Iterator[Relation]:
    """Every relation on an ``n``-element set (``2**(n*n)`` of them)."""
    g = GroundSet(n)
    for rows in product(range(1 << n), repeat=n):
        yield Relation(g, g, rows)


@dataclass(frozen=True)
class Permutation:
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(self.image)
        object.__setattr__(self, "image", image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"{image} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(x) = self(other(x))
        if self.size != other.size:
            raise DimensionError("permutations of different sets")
        return Permutation(tuple(self.image[i] for i in other.image))

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for x, y in enumerate(self.image):
            inv[y] = x
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.image))

    def __repr__(self) -> str:
        return f"Permutation({list(self.image)})"


def delta_of_permutation(sigma: Permutation) -> Relation:
    """``Delta_sigma = {(sigma(x), x)}``; a monoid homomorphism."""
    n = sigma.size
    bits = [0] * n
    for x, y in enumerate(sigma.image):
        bits[y] |= 1 << x
    g = GroundSet(n)
    return Relation(g, g, tuple(bits))
