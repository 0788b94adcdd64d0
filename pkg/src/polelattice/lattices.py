"""Finite lattices: bound tables, irreducibles, Möbius function and the
standard constructions (downset lattices, opposites, pole lattices)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import ContractError, DomainError, ResourceGuardError
from .posets import (
    Poset,
    _downsets,
    antichain_poset,
    chain_poset,
    enumerate_posets,
    pole_decomposition,
    poset_from_covers,
)

__all__ = [
    "Lattice",
    "DownsetLattice",
    "IrreducibleData",
    "PoleSignature",
    "lattice_from_poset",
    "irreducibles",
    "mobius",
    "is_distributive",
    "downset_lattice",
    "opposite_lattice",
    "pole_signature",
    "pole_lattice",
    "chain_lattice",
    "boolean_lattice",
    "diamond_m3",
    "pentagon_n5",
    "lattice_from_covers",
    "enumerate_lattices",
    "enumerate_pole_signatures",
]

MAX_DOWNSET_BASE = 16


class Lattice:
    """A finite lattice with precomputed join and meet tables.

    Instances are treated as immutable; the Möbius memo is the only state
    filled in lazily, and every entry is determined by the order.
    """

    def __init__(self, poset: Poset, join: Sequence[Sequence[int]], meet: Sequence[Sequence[int]],
                 bottom: int, top: int, name: Optional[str] = None):
        self.poset = poset
        self.join = tuple(tuple(r) for r in join)
        self.meet = tuple(tuple(r) for r in meet)
        self.bottom = bottom
        self.top = top
        self.name = name
        self._mobius_rows: dict[int, dict[int, int]] = {}
        self._irr: Optional[IrreducibleData] = None
        self._op: Optional[Lattice] = None

    # basic access
    @property
    def size(self) -> int:
        return self.poset.size

    def __len__(self) -> int:
        return self.poset.size

    def elements(self) -> range:
        return range(self.poset.size)

    def le(self, x: int, y: int) -> bool:
        return self.poset.le(x, y)

    def lt(self, x: int, y: int) -> bool:
        return self.poset.lt(x, y)

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        for x in xs:
            acc = self.join[acc][x]
        return acc

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        for x in xs:
            acc = self.meet[acc][x]
        return acc

    def interval(self, x: int, y: int) -> list[int]:
        """Elements of ``[x, y]`` in index order."""
        mask = self.poset.up[x] & self.poset.down[y]
        return [z for z in range(self.size) if mask >> z & 1]

    @property
    def irr(self) -> "IrreducibleData":
        if self._irr is None:
            self._irr = irreducibles(self)
        return self._irr

    @property
    def op(self) -> "Lattice":
        if self._op is None:
            self._op = opposite_lattice(self)
        return self._op

    def key(self) -> tuple:
        return (self.size, self.poset.leq.bits)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        return isinstance(other, Lattice) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        label = f"{self.name!r}, " if self.name else ""
        return f"Lattice({label}n={self.size})"


class DownsetLattice(Lattice):
    """``I_down(E, R)``: down-closed subsets of a poset, ordered by inclusion."""

    def __init__(self, base: Poset, masks: Sequence[int], **kw):
        self.base = base
        self.masks = tuple(masks)
        self.index = {m: i for i, m in enumerate(self.masks)}
        n = len(self.masks)
        ups = [sum(1 << j for j, b in enumerate(self.masks) if a & ~b == 0) for a in self.masks]
        poset = Poset.from_upsets(ups)
        join = [[self.index[a | b] for b in self.masks] for a in self.masks]
        meet = [[self.index[a & b] for b in self.masks] for a in self.masks]
        super().__init__(poset, join, meet, 0, n - 1, **kw)

    def principal(self, e: int) -> int:
        """Index of ``E_{<=e}``."""
        return self.index[self.base.down[e]]

    def strict(self, e: int) -> int:
        """Index of ``E_{<e}``."""
        return self.index[self.base.down[e] & ~(1 << e)]

    def members(self, i: int) -> list[int]:
        m = self.masks[i]
        return [e for e in range(self.base.size) if m >> e & 1]


@dataclass(frozen=True)
class IrreducibleData:
    irr: tuple[int, ...]
    r_map: dict
    meet_irr: tuple[int, ...]
    s_map: dict

    def r(self, e: int) -> int:
        return self.r_map[e]

    def s(self, a: int) -> int:
        return self.s_map[a]


def lattice_from_poset(p: Poset, name: Optional[str] = None) -> Optional[Lattice]:
    """The lattice on ``p`` if all binary bounds exist, otherwise ``None``."""
    n = p.size
    if n == 0:
        return None
    up, down = p.up, p.down

    def least(mask: int, cone) -> Optional[int]:
        for z in range(n):
            if mask >> z & 1 and cone[z] & mask == mask:
                return z
        return None

    join = [[0] * n for _ in range(n)]
    meet = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(x, n):
            j = least(up[x] & up[y], up)
            m = least(down[x] & down[y], down)
            if j is None or m is None:
                return None
            join[x][y] = join[y][x] = j
            meet[x][y] = meet[y][x] = m
    full = (1 << n) - 1
    bottom = least(full, up)
    top = least(full, down)
    if bottom is None or top is None:
        return None
    return Lattice(p, join, meet, bottom, top, name=name)


def irreducibles(t: Lattice) -> IrreducibleData:
    """Join-irreducibles with ``r(e)``, meet-irreducibles with ``s(a)``."""
    p = t.poset
    irr, r_map, mirr, s_map = [], {}, [], {}
    for e in t.elements():
        below = [x for x in t.elements() if p.lt(x, e)]
        r = t.join_all(below)
        if e != t.bottom and r != e:
            irr.append(e)
            r_map[e] = r
        above = [x for x in t.elements() if p.lt(e, x)]
        s = t.meet_all(above)
        if e != t.top and s != e:
            mirr.append(e)
            s_map[e] = s
    return IrreducibleData(tuple(irr), r_map, tuple(mirr), s_map)


def _mobius_row(t: Lattice, x: int) -> dict[int, int]:
    row = t._mobius_rows.get(x)
    if row is not None:
        return row
    p = t.poset
    above = [z for z in t.elements() if p.le(x, z)]
    above.sort(key=lambda z: bin(p.down[z]).count("1"))
    row = {}
    for y in above:
        if y == x:
            row[y] = 1
        else:
            row[y] = -sum(row[z] for z in above if z in row and p.lt(z, y))
    t._mobius_rows[x] = row
    return row


def mobius(t: Lattice, x: int, y: int) -> int:
    if not t.le(x, y):
        raise DomainError(f"mobius({x}, {y}) needs {x} <= {y}")
    return _mobius_row(t, x)[y]


def is_distributive(t: Lattice) -> bool:
    j, m = t.join, t.meet
    r = range(t.size)
    return all(m[x][j[y][z]] == j[m[x][y]][m[x][z]] for x in r for y in r for z in r)


def downset_lattice(p: Poset, name: Optional[str] = None) -> DownsetLattice:
    if p.size > MAX_DOWNSET_BASE:
        raise ResourceGuardError(f"downset lattice limited to |P| <= {MAX_DOWNSET_BASE}")
    masks = sorted(_downsets(p), key=lambda m: (bin(m).count("1"), m))
    return DownsetLattice(p, masks, name=name)


def opposite_lattice(t: Lattice) -> Lattice:
    """Same carrier, reversed order; caches the pair so that ``T.op.op is T``."""
    if t._op is not None:
        return t._op
    name = f"{t.name}^op" if t.name else None
    op = Lattice(t.poset.opposite(), t.meet, t.join, t.top, t.bottom, name=name)
    op._op = t
    t._op = op
    return op


# -- pole lattices -----------------------------------------------------------

@dataclass(frozen=True)
class PoleSignature:
    """Block sizes of a pole lattice, bottom to top."""

    level_sizes: tuple[int, ...]

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.level_sizes)
        object.__setattr__(self, "level_sizes", sizes)
        if not sizes:
            raise ContractError("a lattice has at least one element")
        if any(s not in (1, 2) for s in sizes):
            raise ContractError("levels have size 1 or 2")
        if sizes[0] != 1 or sizes[-1] != 1:
            raise ContractError("bottom and top levels must be singletons")
        if any(a == b == 2 for a, b in zip(sizes, sizes[1:])):
            raise ContractError("adjacent twin levels do not form a lattice")

    @property
    def size(self) -> int:
        return sum(self.level_sizes)

    @property
    def twin_levels(self) -> int:
        return self.level_sizes.count(2)

    def __str__(self) -> str:
        return ",".join(map(str, self.level_sizes))


def pole_signature(t: Lattice) -> Optional[PoleSignature]:
    dec = pole_decomposition(t.poset)
    return None if dec is None else PoleSignature(dec.signature)


def pole_lattice(sig, name: Optional[str] = None) -> Lattice:
    """The pole lattice with the given block sizes; elements numbered bottom-up."""
    if not isinstance(sig, PoleSignature):
        sig = PoleSignature(tuple(sig))
    levels, nxt = [], 0
    for s in sig.level_sizes:
        levels.append(list(range(nxt, nxt + s)))
        nxt += s
    ups = [0] * nxt
    above = 0
    for lvl in reversed(levels):
        for x in lvl:
            ups[x] = above | 1 << x
        for x in lvl:
            above |= 1 << x
    lat = lattice_from_poset(Poset.from_upsets(ups), name=name or f"pole[{sig}]")
    assert lat is not None
    return lat


def enumerate_pole_signatures(max_size: int) -> list[PoleSignature]:
    """All pole-lattice signatures with at most ``max_size`` elements, lexicographic."""
    out = []

    def grow(prefix: list[int], total: int) -> None:
        if prefix and prefix[-1] == 1:
            out.append(PoleSignature(tuple(prefix)))
        for s in (1, 2):
            if total + s > max_size or (s == 2 and (not prefix or prefix[-1] == 2)):
                continue
            grow(prefix + [s], total + s)

    grow([], 0)
    return sorted(out, key=lambda s: s.level_sizes)


# -- named lattices ------------------------------------------------------------

def chain_lattice(n: int) -> Lattice:
    lat = lattice_from_poset(chain_poset(n), name=f"C{n}")
    if lat is None:
        raise ContractError("a chain needs at least one element")
    return lat


def boolean_lattice(k: int) -> DownsetLattice:
    return downset_lattice(antichain_poset(k), name=f"B{k}")


def lattice_from_covers(n: int, covers: Iterable[tuple[int, int]], name: Optional[str] = None) -> Lattice:
    lat = lattice_from_poset(poset_from_covers(n, covers), name=name)
    if lat is None:
        raise ContractError("cover relation does not define a lattice")
    return lat


def diamond_m3() -> Lattice:
    return lattice_from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], name="M3")


def pentagon_n5() -> Lattice:
    return lattice_from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], name="N5")


def enumerate_lattices(n: int) -> list[Lattice]:
    """All lattices on ``n`` elements up to isomorphism.

    A lattice with ``n >= 2`` elements is its bounds stacked around an
    arbitrary poset of size ``n - 2`` that happens to produce a lattice, so the
    iso classes come from the poset enumerator.
    """
    if n <= 0:
        return []
    if n == 1:
        return [chain_lattice(1)]
    out = []
    for q in enumerate_posets(n - 2):
        m = q.size
        full = (1 << n) - 1
        ups = [full]  # new bottom at index 0
        for x in range(m):
            ups.append((q.up[x] << 1) | 1 << (n - 1))
        ups.append(1 << (n - 1))
        lat = lattice_from_poset(Poset.from_upsets(ups), name=f"L{n}.{len(out)}")
        if lat is not None:
            out.append(lat)
    return out
