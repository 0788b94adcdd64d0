"""The algebra of relations on a finite set with integer coefficients.

The central element is ``delta = sum_A (-1)^|A| (Rbar^op u Delta_A)`` attached
to an order ``R``; it controls projectivity of the associated simple functors.
Relations are keyed by their packed row tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import ConsistencyError, ContractError, DimensionError, ResourceGuardError
from .posets import Poset, pole_decomposition
from .relations import (
    GroundSet,
    Permutation,
    Relation,
    compose_bits,
    delta_of_permutation,
    is_order,
)

__all__ = [
    "RelLinComb",
    "FundModuleElement",
    "delta",
    "rel_product",
    "s_delta_classify",
    "delta_square_identity",
    "nonzero_condition",
    "fund_module_act",
    "conjugate",
    "is_simple_projective",
    "upper_complement_op",
]

MAX_DELTA_SIZE = 12
MAX_NONZERO_SIZE = 4


class RelLinComb:
    """Finitely supported ``Z``-combination of relations on one ground set."""

    __slots__ = ("size", "terms")

    def __init__(self, size: int, terms: Optional[Mapping] = None):
        self.size = size
        clean = {}
        for rel, c in (terms or {}).items():
            bits = rel.bits if isinstance(rel, Relation) else tuple(rel)
            if len(bits) != size:
                raise DimensionError("relation on the wrong ground set")
            if c:
                clean[bits] = clean.get(bits, 0) + int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def single(cls, rel: Relation, coeff: int = 1) -> "RelLinComb":
        if not rel.is_square:
            raise DimensionError("relations must be on a single set")
        return cls(rel.rows.size, {rel.bits: coeff})

    @classmethod
    def identity(cls, n: int) -> "RelLinComb":
        return cls(n, {tuple(1 << i for i in range(n)): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, rel) -> int:
        bits = rel.bits if isinstance(rel, Relation) else tuple(rel)
        return self.terms.get(bits, 0)

    def relations(self) -> list[tuple[Relation, int]]:
        g = GroundSet(self.size)
        return [(Relation(g, g, b), c) for b, c in sorted(self.terms.items())]

    def __add__(self, other: "RelLinComb") -> "RelLinComb":
        if other.size != self.size:
            raise DimensionError("different ground sets")
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return RelLinComb(self.size, out)

    def __neg__(self) -> "RelLinComb":
        return RelLinComb(self.size, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "RelLinComb") -> "RelLinComb":
        return self + (-other)

    def scale(self, k: int) -> "RelLinComb":
        return RelLinComb(self.size, {b: k * v for b, v in self.terms.items()})

    def __mul__(self, other: "RelLinComb") -> "RelLinComb":
        return rel_product(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, RelLinComb) and self.size == other.size and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.size, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"RelLinComb(n={self.size}, terms={len(self.terms)})"


def rel_product(u: RelLinComb, v: RelLinComb) -> RelLinComb:
    if u.size != v.size:
        raise DimensionError("different ground sets")
    out: dict[tuple, int] = {}
    for a, c in u.terms.items():
        for b, d in v.terms.items():
            k = compose_bits(a, b)
            out[k] = out.get(k, 0) + c * d
    return RelLinComb(u.size, out)


def _order_of(order) -> Relation:
    rel = order.leq if isinstance(order, Poset) else order
    if not rel.is_square or not is_order(rel):
        raise ContractError("an order relation is required")
    return rel


def upper_complement_op(order) -> tuple[int, ...]:
    """Rows of ``Rbar^op``: ``(x, y)`` is in it iff ``y`` is not below ``x``."""
    rel = _order_of(order)
    n = rel.rows.size
    down = [0] * n
    for x, row in enumerate(rel.bits):
        for y in range(n):
            if row >> y & 1:
                down[y] |= 1 << x
    full = (1 << n) - 1
    return tuple(full & ~down[x] for x in range(n))


def delta(order) -> RelLinComb:
    """``sum_A (-1)^|A| (Rbar^op u Delta_A)``; all ``2^|E|`` terms are distinct."""
    rel = _order_of(order)
    n = rel.rows.size
    if n > MAX_DELTA_SIZE:
        raise ResourceGuardError(f"delta is limited to |E| <= {MAX_DELTA_SIZE}")
    base = upper_complement_op(rel)
    terms = {}
    for mask in range(1 << n):
        bits = tuple(b | ((1 << x) if mask >> x & 1 else 0) for x, b in enumerate(base))
        terms[bits] = -1 if bin(mask).count("1") % 2 else 1
    return RelLinComb(n, terms)


def s_delta_classify(s: Relation, order) -> Optional[Permutation]:
    """``sigma`` with ``S = Delta_sigma R`` if it exists (needs ``S = SR``)."""
    rel = _order_of(order)
    if s.shape != rel.shape:
        raise DimensionError("S and R must live on the same set")
    if compose_bits(s.bits, rel.bits) != s.bits:
        raise ContractError("S must satisfy S = SR")
    # row sigma(y) of Delta_sigma R is row y of R
    where = {}
    for z, row in enumerate(s.bits):
        where.setdefault(row, []).append(z)
    image = []
    for y, row in enumerate(rel.bits):
        zs = where.get(row)
        if not zs or len(zs) != 1:
            return None
        image.append(zs[0])
    if len(set(image)) != len(image):
        return None
    return Permutation(tuple(image))


def conjugate(sigma: Permutation, rel: Relation) -> Relation:
    """``Delta_sigma R Delta_sigma^-1``."""
    d = delta_of_permutation(sigma)
    return d @ rel @ delta_of_permutation(sigma.inverse())


@dataclass(frozen=True)
class DeltaSquareRecord:
    size: int
    singleton_count: int
    tau: Permutation
    square_matches: bool
    idempotent: bool

    @property
    def ok(self) -> bool:
        return self.square_matches and self.idempotent


def delta_square_identity(p: Poset) -> DeltaSquareRecord:
    """Compare ``delta^2`` with ``(-1)^|E1| Delta_tau delta`` and test idempotency."""
    dec = pole_decomposition(p)
    if dec is None:
        raise ContractError("delta_square_identity needs a pole poset")
    d = delta(p)
    tau = dec.tau()
    e1 = len(dec.singletons)
    sign = -1 if e1 % 2 else 1
    rhs = rel_product(RelLinComb.single(delta_of_permutation(tau), sign), d)
    sq = rel_product(d, d)
    return DeltaSquareRecord(p.size, e1, tau, sq == rhs, rel_product(rhs, rhs) == rhs)


def _upsets(rel: Relation) -> list[int]:
    n = rel.rows.size
    out = []
    for m in range(1 << n):
        closed = True
        for x in range(n):
            if m >> x & 1 and rel.bits[x] & ~m:
                closed = False
                break
        if closed:
            out.append(m)
    return out


def nonzero_condition(order) -> bool:
    """Is there a relation ``S`` (with ``S = SR``) such that ``delta S delta != 0``?"""
    rel = _order_of(order)
    n = rel.rows.size
    if n > MAX_NONZERO_SIZE:
        raise ResourceGuardError(f"nonzero_condition is limited to |E| <= {MAX_NONZERO_SIZE}")
    d = delta(rel)
    # S o D for a term D only depends on each row of S through OR-tables
    tables = []
    for bits, c in d.terms.items():
        table = [0] * (1 << n)
        for m in range(1, 1 << n):
            low = (m & -m).bit_length() - 1
            table[m] = table[m & (m - 1)] | bits[low]
        tables.append((table, c))
    ups = _upsets(rel)

    def rows(i: int, acc: list[int]):
        if i == n:
            yield tuple(acc)
            return
        for u in ups:
            acc.append(u)
            yield from rows(i + 1, acc)
            acc.pop()

    for s in rows(0, []):
        sd: dict[tuple, int] = {}
        for table, c in tables:
            k = tuple(table[r] for r in s)
            sd[k] = sd.get(k, 0) + c
        sd = {k: v for k, v in sd.items() if v}
        if not sd:
            continue
        if rel_product(d, RelLinComb(n, sd)):
            return True
    return False


class FundModuleElement:
    """Combination of basis vectors ``Delta_sigma f_R`` keyed by ``sigma``."""

    __slots__ = ("size", "terms")

    def __init__(self, size: int, terms: Optional[Mapping] = None):
        self.size = size
        clean = {}
        for s, c in (terms or {}).items():
            img = s.image if isinstance(s, Permutation) else tuple(s)
            if len(img) != size:
                raise DimensionError("permutation of the wrong size")
            if c:
                clean[img] = clean.get(img, 0) + int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def basis(cls, sigma: Permutation) -> "FundModuleElement":
        return cls(sigma.size, {sigma.image: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, FundModuleElement) and self.terms == other.terms and self.size == other.size

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"FundModuleElement({self.terms})"


def _acting_permutations(q: Relation, target: Relation) -> list[Permutation]:
    """All ``tau`` with ``Delta_E <= Delta_tau^-1 Q <= target``.

    Row ``w`` of ``Delta_tau^-1 Q`` is row ``tau(w)`` of ``Q``.
    """
    n = q.rows.size
    allowed = [[z for z in range(n) if q.bits[z] >> w & 1 and q.bits[z] & ~target.bits[w] == 0]
               for w in range(n)]
    found: list[Permutation] = []
    image = [0] * n
    used = [False] * n

    def go(w: int) -> None:
        if w == n:
            found.append(Permutation(tuple(image)))
            return
        for z in allowed[w]:
            if not used[z]:
                used[z] = True
                image[w] = z
                go(w + 1)
                used[z] = False

    go(0)
    return found


def fund_module_act(q: Relation, x: FundModuleElement, order) -> FundModuleElement:
    """Left action of a relation ``Q`` on the fundamental module of ``(E, R)``."""
    rel = _order_of(order)
    if q.shape != rel.shape:
        raise DimensionError("Q must be a relation on E")
    out: dict[tuple, int] = {}
    for img, c in x.terms.items():
        sigma = Permutation(img)
        taus = _acting_permutations(q, conjugate(sigma, rel))
        if len(taus) > 1:
            raise ConsistencyError("acting permutation is not unique")
        if taus:
            k = (taus[0] * sigma).image
            out[k] = out.get(k, 0) + c
    return FundModuleElement(x.size, out)


def is_simple_projective(order, characteristic: int) -> bool:
    rel = _order_of(order)
    if characteristic < 0:
        raise ValueError("characteristic must be non-negative")
    p = Poset.from_relation(rel)
    if p.is_chain():
        return True
    return pole_decomposition(p) is not None and characteristic != 2
