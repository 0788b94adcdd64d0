"""Join-morphisms between finite lattices.

Covers validation, extension from join-irreducibles, exhaustive enumeration,
the opposite morphism ``f^op(p) = V{t | f(t) <= p}`` and the interval
construction pairing injective join-morphisms ``P -> T`` (``P`` a pole
lattice) with injective join-morphisms of the opposite lattices.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import ConsistencyError, ContractError, DimensionError, ResourceGuardError
from .lattices import Lattice, is_distributive, pole_signature
from .posets import TwinPair, pole_decomposition
from .relations import Permutation

__all__ = [
    "JoinMorphism",
    "is_join_morphism",
    "extend_from_irreducibles",
    "identity_morphism",
    "compose",
    "automorphism_morphism",
    "op_morphism",
    "enumerate_hom",
    "enumerate_inj",
    "enumerate_sur",
    "omega",
    "inj_sur_bijection",
    "MAX_CANDIDATES",
]

MAX_CANDIDATES = 10 ** 8


@dataclass(frozen=True, eq=False)
class JoinMorphism:
    source: Lattice
    target: Lattice
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(self.map))
        if len(self.map) != self.source.size:
            raise DimensionError("map length must equal the source size")
        if any(not 0 <= v < self.target.size for v in self.map):
            raise DimensionError("map values must be target elements")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)

    def is_surjective(self) -> bool:
        return len(set(self.map)) == self.target.size

    def image(self) -> list[int]:
        return sorted(set(self.map))

    def __matmul__(self, other: "JoinMorphism") -> "JoinMorphism":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, JoinMorphism) and self.map == other.map
                and self.source == other.source and self.target == other.target)

    def __hash__(self) -> int:
        return hash(self.map)

    def __repr__(self) -> str:
        return f"JoinMorphism({list(self.map)})"


def is_join_morphism(source: Lattice, target: Lattice, mapping: Sequence[int]) -> bool:
    if len(mapping) != source.size:
        raise DimensionError("map length must equal the source size")
    if mapping[source.bottom] != target.bottom:
        return False
    sj, tj = source.join, target.join
    n = source.size
    for x in range(n):
        fx = mapping[x]
        row, trow = sj[x], tj[fx]
        for y in range(x + 1, n):
            if mapping[row[y]] != trow[mapping[y]]:
                return False
    return True


def _distributive(t: Lattice) -> bool:
    flag = getattr(t, "_distributive", None)
    if flag is None:
        flag = is_distributive(t)
        t._distributive = flag
    return flag


def extend_from_irreducibles(p: Lattice, target: Lattice, phi: Mapping[int, int]) -> JoinMorphism:
    """``phi~(x) = V{phi(e) | e in Irr(P), e <= x}``; needs ``P`` distributive."""
    if not _distributive(p):
        raise ContractError("extension from irreducibles needs a distributive source")
    irr = p.irr.irr
    if set(phi) != set(irr):
        raise ContractError("phi must be defined exactly on the join-irreducibles")
    for e in irr:
        for f in irr:
            if p.le(e, f) and not target.le(phi[e], phi[f]):
                raise ContractError("phi is not order-preserving")
    return JoinMorphism(p, target, _extend(p, target, phi))


def _extend(p: Lattice, target: Lattice, phi: Mapping[int, int]) -> tuple[int, ...]:
    tj = target.join
    out = []
    irr = p.irr.irr
    for x in range(p.size):
        acc = target.bottom
        for e in irr:
            if p.le(e, x):
                acc = tj[acc][phi[e]]
        out.append(acc)
    return tuple(out)


def identity_morphism(t: Lattice) -> JoinMorphism:
    return JoinMorphism(t, t, tuple(range(t.size)))


def compose(g: JoinMorphism, f: JoinMorphism) -> JoinMorphism:
    """``g o f``."""
    if f.target != g.source:
        raise DimensionError("cannot compose: target of f is not the source of g")
    gm = g.map
    return JoinMorphism(f.source, g.target, tuple(gm[v] for v in f.map))


def automorphism_morphism(t: Lattice, sigma: Permutation) -> JoinMorphism:
    """An order automorphism viewed as a join-morphism ``T -> T``."""
    m = JoinMorphism(t, t, sigma.image)
    if not is_join_morphism(t, t, m.map):
        raise ContractError("permutation is not a lattice automorphism")
    return m


def op_morphism(f: JoinMorphism) -> JoinMorphism:
    """``f^op : P^op -> T^op`` for ``f : T -> P``."""
    t, p = f.source, f.target
    tj = t.join
    out = []
    for q in range(p.size):
        acc = t.bottom
        for x in range(t.size):
            if p.le(f.map[x], q):
                acc = tj[acc][x]
        out.append(acc)
    return JoinMorphism(p.op, t.op, tuple(out))


# -- enumeration -------------------------------------------------------------

_HOM_CACHE: dict[tuple, tuple[tuple[int, ...], ...]] = {}


def _hom_maps(p: Lattice, t: Lattice) -> tuple[tuple[int, ...], ...]:
    key = (p.key(), t.key())
    hit = _HOM_CACHE.get(key)
    if hit is not None:
        return hit
    irr = sorted(p.irr.irr, key=lambda e: bin(p.poset.down[e]).count("1"))
    if t.size ** len(irr) > MAX_CANDIDATES:
        raise ResourceGuardError(
            f"{t.size}^{len(irr)} candidate assignments exceed the bound {MAX_CANDIDATES}")
    below = {e: [f for f in irr if f != e and p.le(f, e)] for e in irr}
    tj = t.join
    found = []
    phi: dict[int, int] = {}

    def assign(i: int) -> None:
        if i == len(irr):
            cand = _extend(p, t, phi)
            if is_join_morphism(p, t, cand):
                found.append(cand)
            return
        e = irr[i]
        lower = t.bottom
        for f in below[e]:
            lower = tj[lower][phi[f]]
        for v in range(t.size):
            if t.le(lower, v):
                phi[e] = v
                assign(i + 1)
        phi.pop(e, None)

    assign(0)
    result = tuple(sorted(set(found)))
    _HOM_CACHE[key] = result
    return result


def enumerate_hom(p: Lattice, t: Lattice) -> list[JoinMorphism]:
    """All join-morphisms ``P -> T`` in lexicographic order of their maps."""
    return [JoinMorphism(p, t, m) for m in _hom_maps(p, t)]


def enumerate_inj(p: Lattice, t: Lattice) -> list[JoinMorphism]:
    return [JoinMorphism(p, t, m) for m in _hom_maps(p, t) if len(set(m)) == p.size]


def enumerate_sur(t: Lattice, p: Lattice) -> list[JoinMorphism]:
    return [JoinMorphism(t, p, m) for m in _hom_maps(t, p) if len(set(m)) == p.size]


# -- the interval construction ---------------------------------------------------

def _twin_levels(p: Lattice) -> list[tuple[int, int]]:
    dec = pole_decomposition(p.poset)
    if dec is None or pole_signature(p) is None:
        raise ContractError("source must be a pole lattice")
    return [(b.first, b.second) for b in dec.blocks if isinstance(b, TwinPair)]


def _chain_interval(p: Lattice, v: int, w: int) -> list[int]:
    seg = p.interval(v, w)
    seg.sort(key=lambda x: bin(p.poset.down[x]).count("1"))
    return seg


def omega(lam: JoinMorphism) -> JoinMorphism:
    """The injective meet-morphism ``lambda~ : P -> T`` attached to an injective
    join-morphism ``lambda : P -> T``, returned as a join-morphism ``P^op -> T^op``.

    Twins are copied; on each totally ordered interval between twin levels the
    map is either copied or shifted up by one step and capped, according to
    whether ``lambda`` already sends the top of the interval to the right meet.
    A one-point interval follows the same rule (a shift there is just the cap).
    """
    p, t = lam.source, lam.target
    if not lam.is_injective() or not is_join_morphism(p, t, lam.map):
        raise ContractError("omega needs an injective join-morphism")
    twins = _twin_levels(p)
    lm = lam.map
    out = list(lm)
    v_prev = p.bottom
    bounds = []
    for a, b in twins:
        bounds.append((v_prev, p.meet[a][b], t.meet[lm[a]][lm[b]]))
        v_prev = p.join[a][b]
    bounds.append((v_prev, p.top, t.top))
    for v, w, cap in bounds:
        seg = _chain_interval(p, v, w)
        if lm[w] == cap:
            continue
        for lo, hi in zip(seg, seg[1:]):
            out[lo] = lm[hi]
        out[w] = cap
    res = JoinMorphism(p.op, t.op, tuple(out))
    if not res.is_injective() or not is_join_morphism(p.op, t.op, res.map):
        raise ConsistencyError("interval construction did not produce an injective meet-morphism")
    return res


def inj_sur_bijection(p: Lattice, t: Lattice) -> list[tuple[JoinMorphism, JoinMorphism]]:
    """Pairs ``(lambda, omega(lambda)^op)`` with ``lambda`` in ``Inj(P, T)``.

    The second components run through ``Sur(T, P)`` exactly once each; this is
    checked before returning.
    """
    pairs = []
    for lam in enumerate_inj(p, t):
        pairs.append((lam, op_morphism(omega(lam))))
    images = sorted(s.map for _, s in pairs)
    expected = sorted(m.map for m in enumerate_sur(t, p))
    if images != expected:
        raise ConsistencyError("Inj/Sur pairing is not a bijection")
    return pairs
