"""Finite posets, their automorphism groups and pole-poset recognition.

A pole poset is an ordinal stack ``A_1 * ... * A_r`` of blocks, each block a
single element or a pair of incomparable twins.  Two independent recognisers
are provided: a structural top-down peel (:func:`pole_decomposition`) and the
permutation criterion "``x !<= y`` implies ``y <= tau(x)``"
(:func:`is_pole_by_permutation`).  They must always agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, Optional, Union

import numpy as np

from .errors import ContractError, ResourceGuardError
from .relations import GroundSet, Permutation, Relation, is_order

__all__ = [
    "Poset",
    "Singleton",
    "TwinPair",
    "PoleDecomposition",
    "AutGroup",
    "automorphisms",
    "permutation_criterion_holds",
    "is_pole_by_permutation",
    "pole_decomposition",
    "enumerate_posets",
    "canonical_form",
    "chain_poset",
    "antichain_poset",
    "poset_from_covers",
]

MAX_ENUMERATION_SIZE = 6


@dataclass(frozen=True, eq=False)
class Poset:
    """``(E, R)`` with ``(x, y) in R`` iff ``x <= y``."""

    ground: GroundSet
    leq: Relation

    def __post_init__(self):
        if self.leq.rows != self.ground or self.leq.cols != self.ground:
            if self.leq.shape != (self.ground.size, self.ground.size):
                raise ContractError("order relation does not live on the ground set")
        if not is_order(self.leq):
            raise ContractError("relation is not an order")

    @classmethod
    def from_relation(cls, leq: Relation) -> "Poset":
        return cls(leq.rows, leq)

    @classmethod
    def from_upsets(cls, ups: Iterable[int], labels=None) -> "Poset":
        ups = tuple(ups)
        g = GroundSet(len(ups), labels)
        return cls(g, Relation(g, g, ups))

    @property
    def size(self) -> int:
        return self.ground.size

    def __len__(self) -> int:
        return self.ground.size

    @property
    def up(self) -> tuple[int, ...]:
        """``up[x]`` is the bitmask of ``{y | x <= y}``."""
        return self.leq.bits

    @cached_property
    def down(self) -> tuple[int, ...]:
        n = self.size
        out = [0] * n
        for x, row in enumerate(self.leq.bits):
            for y in range(n):
                if row >> y & 1:
                    out[y] |= 1 << x
        return tuple(out)

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq.bits[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.le(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.le(x, y) or self.le(y, x)

    def maximal(self, within: Optional[int] = None) -> list[int]:
        within = (1 << self.size) - 1 if within is None else within
        return [x for x in range(self.size) if within >> x & 1 and self.up[x] & within == 1 << x]

    def minimal(self, within: Optional[int] = None) -> list[int]:
        within = (1 << self.size) - 1 if within is None else within
        return [x for x in range(self.size) if within >> x & 1 and self.down[x] & within == 1 << x]

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain ending at each element (minimal elements: 0)."""
        h = [0] * self.size
        for x in sorted(range(self.size), key=lambda e: bin(self.down[e]).count("1")):
            below = self.down[x] & ~(1 << x)
            h[x] = max((h[y] + 1 for y in range(self.size) if below >> y & 1), default=0)
        return tuple(h)

    def is_chain(self) -> bool:
        return all(self.comparable(x, y) for x in range(self.size) for y in range(x))

    def induced(self, elements: Iterable[int]) -> "Poset":
        """Full subposet on ``elements`` (relabelled 0..k-1 in the given order)."""
        elements = list(elements)
        ups = []
        for x in elements:
            ups.append(sum(1 << j for j, y in enumerate(elements) if self.le(x, y)))
        return Poset.from_upsets(ups)

    def relabel(self, sigma: Permutation) -> "Poset":
        """Transport the order along ``sigma``: ``sigma(x) <= sigma(y)`` iff ``x <= y``."""
        n = self.size
        ups = [0] * n
        for x in range(n):
            ups[sigma(x)] = sum(1 << sigma(y) for y in range(n) if self.le(x, y))
        return Poset.from_upsets(ups)

    def opposite(self) -> "Poset":
        return Poset.from_upsets(self.down)

    def matrix_strings(self) -> list[str]:
        return ["".join("1" if self.le(i, j) else "0" for j in range(self.size)) for i in range(self.size)]

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.leq.bits == other.leq.bits

    def __hash__(self) -> int:
        return hash(self.leq.bits)

    def __repr__(self) -> str:
        return f"Poset(n={self.size}, leq={self.matrix_strings()})"


def chain_poset(n: int) -> Poset:
    return Poset.from_upsets(((1 << n) - 1) & ~((1 << i) - 1) for i in range(n))


def antichain_poset(n: int) -> Poset:
    return Poset.from_upsets(1 << i for i in range(n))


def poset_from_covers(n: int, covers: Iterable[tuple[int, int]]) -> Poset:
    """Reflexive-transitive closure of the cover pairs ``(lower, upper)``."""
    ups = [1 << i for i in range(n)]
    for a, b in covers:
        ups[a] |= 1 << b
    changed = True
    while changed:
        changed = False
        for x in range(n):
            acc = ups[x]
            for y in range(n):
                if acc >> y & 1:
                    acc |= ups[y]
            if acc != ups[x]:
                ups[x] = acc
                changed = True
    return Poset.from_upsets(ups)


# -- automorphisms -----------------------------------------------------------

@dataclass(frozen=True)
class AutGroup:
    elements: tuple[Permutation, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, sigma: Permutation) -> bool:
        return sigma in self.elements

    @property
    def order(self) -> int:
        return len(self.elements)


def automorphisms(p: Poset) -> AutGroup:
    """All order automorphisms, by backtracking with degree pruning."""
    n = p.size
    sig = [(bin(p.up[x]).count("1"), bin(p.down[x]).count("1")) for x in range(n)]
    image = [-1] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(x: int) -> None:
        if x == n:
            found.append(Permutation(tuple(image)))
            return
        for y in range(n):
            if used[y] or sig[y] != sig[x]:
                continue
            ok = True
            for z in range(x):
                w = image[z]
                if p.le(z, x) != p.le(w, y) or p.le(x, z) != p.le(y, w):
                    ok = False
                    break
            if ok:
                image[x] = y
                used[y] = True
                extend(x + 1)
                used[y] = False
        image[x] = -1

    extend(0)
    found.sort(key=lambda s: s.image)
    return AutGroup(tuple(found))


# -- permutation criterion ---------------------------------------------------

def permutation_criterion_holds(p: Poset, tau: Permutation) -> bool:
    """``x !<= y  =>  y <= tau(x)`` for all ``x, y`` (equivalently ``Rbar^op Delta_{tau^-1} <= R``)."""
    n = p.size
    full = (1 << n) - 1
    for x in range(n):
        not_above = full & ~p.up[x]  # the y with x !<= y
        if not_above & ~p.down[tau(x)]:
            return False
    return True


def _allowed_images(p: Poset) -> list[int]:
    n = p.size
    full = (1 << n) - 1
    allowed = []
    for x in range(n):
        not_above = full & ~p.up[x]
        allowed.append(sum(1 << t for t in range(n) if not_above & ~p.down[t] == 0))
    return allowed


def _find_matching(allowed: list[int]) -> Optional[list[int]]:
    n = len(allowed)
    match_of_target = [-1] * n

    def augment(x: int, seen: list[bool]) -> bool:
        for t in range(n):
            if allowed[x] >> t & 1 and not seen[t]:
                seen[t] = True
                if match_of_target[t] < 0 or augment(match_of_target[t], seen):
                    match_of_target[t] = x
                    return True
        return False

    for x in range(n):
        if not augment(x, [False] * n):
            return None
    image = [0] * n
    for t, x in enumerate(match_of_target):
        image[x] = t
    return image


def is_pole_by_permutation(p: Poset) -> Optional[Permutation]:
    """A permutation witnessing the criterion, or ``None``.

    When the twin-swapping automorphism is a witness it is returned; otherwise
    (which the structure theory rules out) the raw matching witness is returned.
    """
    witness = _find_matching(_allowed_images(p))
    if witness is None:
        return None
    n = p.size
    canon = list(range(n))
    for x in range(n):
        incomparable = [y for y in range(n) if not p.comparable(x, y)]
        if len(incomparable) == 1:
            canon[x] = incomparable[0]
    try:
        tau = Permutation(tuple(canon))
    except ValueError:
        return Permutation(tuple(witness))
    if permutation_criterion_holds(p, tau) and p.relabel(tau) == p:
        return tau
    return Permutation(tuple(witness))


# -- structural decomposition ------------------------------------------------

@dataclass(frozen=True)
class Singleton:
    element: int

    @property
    def members(self) -> tuple[int, ...]:
        return (self.element,)


@dataclass(frozen=True)
class TwinPair:
    first: int
    second: int

    @property
    def members(self) -> tuple[int, ...]:
        return (self.first, self.second)


Block = Union[Singleton, TwinPair]


@dataclass(frozen=True)
class PoleDecomposition:
    """Blocks listed bottom to top."""

    size: int
    blocks: tuple[Block, ...]

    @property
    def signature(self) -> tuple[int, ...]:
        return tuple(len(b.members) for b in self.blocks)

    @cached_property
    def block_of(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.blocks) for x in b.members}

    @property
    def singletons(self) -> list[int]:
        """Elements comparable to everything (the totally ordered part)."""
        return [b.element for b in self.blocks if isinstance(b, Singleton)]

    @property
    def twins(self) -> list[int]:
        return [x for b in self.blocks if isinstance(b, TwinPair) for x in b.members]

    @cached_property
    def twin_map(self) -> dict[int, int]:
        out = {}
        for b in self.blocks:
            if isinstance(b, TwinPair):
                out[b.first] = b.second
                out[b.second] = b.first
        return out

    def twin(self, x: int) -> int:
        return self.twin_map[x]

    def tau(self) -> Permutation:
        """The automorphism swapping every twin pair and fixing the rest."""
        tm = self.twin_map
        return Permutation(tuple(tm.get(x, x) for x in range(self.size)))

    def reconstruct(self) -> Relation:
        """Order relation of the stacked blocks."""
        g = GroundSet(self.size)
        ups = [0] * self.size
        above = 0
        for b in reversed(self.blocks):
            for x in b.members:
                ups[x] = above | 1 << x
            for x in b.members:
                above |= 1 << x
        return Relation(g, g, tuple(ups))


def pole_decomposition(p: Poset) -> Optional[PoleDecomposition]:
    """Peel maximal levels off the top; ``None`` if some level is not a valid block."""
    remaining = (1 << p.size) - 1
    blocks: list[Block] = []
    while remaining:
        top = p.maximal(remaining)
        if len(top) > 2:
            return None
        rest = remaining & ~sum(1 << x for x in top)
        for x in top:
            # everything left must lie strictly below every element of the level
            if rest & ~p.down[x]:
                return None
        blocks.append(Singleton(top[0]) if len(top) == 1 else TwinPair(top[0], top[1]))
        remaining = rest
    blocks.reverse()
    return PoleDecomposition(p.size, tuple(blocks))


# -- enumeration up to isomorphism -------------------------------------------

_PERM_CACHE: dict[int, np.ndarray] = {}


def _all_perms(n: int) -> np.ndarray:
    if n not in _PERM_CACHE:
        _PERM_CACHE[n] = np.array(list(permutations(range(n))), dtype=np.intp).reshape(-1, n)
    return _PERM_CACHE[n]


def canonical_form(p: Poset) -> tuple[int, ...]:
    """Lexicographically minimal flattened order matrix over all relabellings."""
    n = p.size
    if n == 0:
        return ()
    m = np.array([[p.le(i, j) for j in range(n)] for i in range(n)], dtype=np.int64)
    perms = _all_perms(n)
    relabelled = m[perms[:, :, None], perms[:, None, :]].reshape(len(perms), n * n)
    weights = 1 << np.arange(n * n - 1, -1, -1, dtype=np.int64)
    best = int(np.argmin(relabelled @ weights))
    return tuple(int(v) for v in relabelled[best])


def _poset_from_canonical(n: int, flat: tuple[int, ...]) -> Poset:
    ups = [sum(1 << j for j in range(n) if flat[i * n + j]) for i in range(n)]
    return Poset.from_upsets(ups)


def _downsets(p: Poset) -> list[int]:
    out = [0]
    for x in sorted(range(p.size), key=lambda e: p.heights[e]):
        # extend every downset that already contains everything strictly below x
        below = p.down[x] & ~(1 << x)
        out += [d | 1 << x for d in out if d & below == below]
    return out


def enumerate_posets(n: int) -> list[Poset]:
    """All posets on ``n`` elements up to isomorphism, in canonical-form order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_ENUMERATION_SIZE:
        raise ResourceGuardError(f"poset enumeration is limited to n <= {MAX_ENUMERATION_SIZE}")
    level = {(): Poset.from_upsets(())}
    for k in range(1, n + 1):
        nxt: dict[tuple[int, ...], Poset] = {}
        for q in level.values():
            # every poset on k elements is q plus a new maximal element over some downset
            for d in _downsets(q):
                ups = [u | (1 << (k - 1) if d >> i & 1 else 0) for i, u in enumerate(q.up)]
                ups.append(1 << (k - 1))
                cand = Poset.from_upsets(ups)
                key = canonical_form(cand)
                if key not in nxt:
                    nxt[key] = _poset_from_canonical(k, key)
        level = nxt
    return [level[k] for k in sorted(level)]
