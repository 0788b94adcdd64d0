"""Evaluations ``F_T(X)`` of the correspondence functor of a lattice.

``F_T(X)`` is the free module on the maps ``X -> T``; a relation ``S`` from
``X`` to ``Y`` acts by ``(S phi)(y) = V{phi(x) | (y, x) in S}`` and a linear
combination of join-morphisms acts by post-composition.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterable, Mapping, Optional, Sequence

from .errors import ContractError, DimensionError, ResourceGuardError
from .klin import LinMorph, e_T
from .lattices import DownsetLattice, Lattice, downset_lattice, pole_signature
from .linalg import IntMatrix, row_spaces_equal
from .posets import Poset, Singleton, pole_decomposition
from .relations import GroundSet, Relation, compose_bits

__all__ = [
    "LatticeMap",
    "FreeElt",
    "act_correspondence",
    "act_free",
    "rho_iso",
    "rho_inverse",
    "gamma",
    "z_basis",
    "rank_SQ",
    "apply_linmorph",
    "all_maps",
    "pole_span_check",
    "SpanRecord",
    "omega_map",
    "gamma_opposite",
]

MAX_MAPS = 200_000
MAX_GAMMA_SIZE = 12


@dataclass(frozen=True, eq=False)
class LatticeMap:
    domain: GroundSet
    codomain: Lattice
    values: tuple[int, ...]

    def __post_init__(self):
        dom = self.domain if isinstance(self.domain, GroundSet) else GroundSet(int(self.domain))
        object.__setattr__(self, "domain", dom)
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != dom.size:
            raise DimensionError("one value per domain element")
        if any(not 0 <= v < self.codomain.size for v in self.values):
            raise DimensionError("values must be lattice elements")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def image(self) -> set[int]:
        return set(self.values)

    def __eq__(self, other) -> bool:
        return (isinstance(other, LatticeMap) and self.values == other.values
                and self.domain.size == other.domain.size and self.codomain == other.codomain)

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"LatticeMap({list(self.values)})"


class FreeElt:
    """Element of ``F_T(X)``: integer combination of maps ``X -> T`` keyed by value tuples."""

    __slots__ = ("domain_size", "codomain", "terms")

    def __init__(self, domain_size: int, codomain: Lattice, terms: Optional[Mapping] = None):
        self.domain_size = domain_size
        self.codomain = codomain
        clean: dict[tuple, int] = {}
        for k, c in (terms or {}).items():
            vals = k.values if isinstance(k, LatticeMap) else tuple(k)
            if len(vals) != domain_size:
                raise DimensionError("map on the wrong domain")
            if c:
                clean[vals] = clean.get(vals, 0) + int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def single(cls, phi: LatticeMap, coeff: int = 1) -> "FreeElt":
        return cls(phi.domain.size, phi.codomain, {phi.values: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FreeElt") -> "FreeElt":
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return FreeElt(self.domain_size, self.codomain, out)

    def __neg__(self) -> "FreeElt":
        return FreeElt(self.domain_size, self.codomain, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "FreeElt") -> "FreeElt":
        return self + (-other)

    def scale(self, k: int) -> "FreeElt":
        return FreeElt(self.domain_size, self.codomain, {m: k * v for m, v in self.terms.items()})

    def _check(self, other: "FreeElt") -> None:
        if other.domain_size != self.domain_size or other.codomain != self.codomain:
            raise DimensionError("elements of different evaluations")

    def __eq__(self, other) -> bool:
        return (isinstance(other, FreeElt) and self.domain_size == other.domain_size
                and self.codomain == other.codomain and self.terms == other.terms)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"FreeElt({dict(sorted(self.terms.items()))})"


def act_correspondence(s: Relation, phi: LatticeMap) -> LatticeMap:
    if s.cols.size != phi.domain.size:
        raise DimensionError("relation columns must match the map domain")
    t = phi.codomain
    out = []
    for row in s.bits:
        acc = t.bottom
        x = 0
        while row:
            if row & 1:
                acc = t.join[acc][phi.values[x]]
            row >>= 1
            x += 1
        out.append(acc)
    return LatticeMap(s.rows, t, tuple(out))


def act_free(s: Relation, u: FreeElt) -> FreeElt:
    out: dict[tuple, int] = {}
    for vals, c in u.terms.items():
        k = act_correspondence(s, LatticeMap(GroundSet(u.domain_size), u.codomain, vals)).values
        out[k] = out.get(k, 0) + c
    return FreeElt(s.rows.size, u.codomain, out)


def _downset_of_op(codomain: Lattice) -> DownsetLattice:
    base = codomain._op
    if not isinstance(base, DownsetLattice):
        raise ContractError("codomain must be the opposite of a downset lattice")
    return base


def rho_iso(phi: LatticeMap) -> Relation:
    """``{(x, e) | e not in phi(x)}`` for ``phi : X -> I_down(E, R)^op``."""
    t = _downset_of_op(phi.codomain)
    full = (1 << t.base.size) - 1
    return Relation(phi.domain, GroundSet(t.base.size), tuple(full & ~t.masks[v] for v in phi.values))


def rho_inverse(s: Relation, codomain: Lattice) -> LatticeMap:
    """Inverse of :func:`rho_iso`; needs ``S = SR``."""
    t = _downset_of_op(codomain)
    if s.cols.size != t.base.size:
        raise DimensionError("relation columns must be the poset elements")
    if compose_bits(s.bits, t.base.leq.bits) != s.bits:
        raise ContractError("S must be right invariant under R")
    full = (1 << t.base.size) - 1
    return LatticeMap(s.rows, codomain, tuple(t.index[full & ~row] for row in s.bits))


def gamma(p: Poset) -> FreeElt:
    """``sum_A (-1)^|A| eta_A`` in ``F_{T^op}(E)`` with ``T = I_down(E, R)``.

    ``eta_A(e)`` is ``E_{<e}`` for ``e`` in ``A`` and ``E_{<=e}`` otherwise.
    """
    n = p.size
    if n > MAX_GAMMA_SIZE:
        raise ResourceGuardError(f"gamma is limited to |E| <= {MAX_GAMMA_SIZE}")
    t = downset_lattice(p)
    strict = [t.strict(e) for e in range(n)]
    princ = [t.principal(e) for e in range(n)]
    terms = {}
    for mask in range(1 << n):
        vals = tuple(strict[e] if mask >> e & 1 else princ[e] for e in range(n))
        terms[vals] = -1 if bin(mask).count("1") % 2 else 1
    return FreeElt(n, t.op, terms)


def all_maps(t: Lattice, m: int) -> Iterable[tuple[int, ...]]:
    """Every map ``X -> T`` with ``|X| = m`` in lexicographic order."""
    if t.size ** m > MAX_MAPS:
        raise ResourceGuardError(f"|T|^|X| = {t.size ** m} exceeds {MAX_MAPS}")
    return product(range(t.size), repeat=m)


def z_basis(q: Lattice, m: int) -> list[LatticeMap]:
    """Maps ``X -> Q`` whose image contains every join-irreducible."""
    need = set(q.irr.irr)
    g = GroundSet(m)
    return [LatticeMap(g, q, v) for v in all_maps(q, m) if need <= set(v)]


def rank_SQ(q: Lattice, m: int) -> int:
    if pole_signature(q) is None:
        raise ContractError("the rank formula is stated for pole lattices")
    e = len(q.irr.irr)
    return sum((-1) ** i * comb(e, i) * (q.size - i) ** m for i in range(e + 1))


def apply_linmorph(u: LinMorph, x: FreeElt) -> FreeElt:
    """Post-composition ``u . x`` from ``F_T(X)`` to ``F_T'(X)``."""
    if x.codomain != u.source:
        raise DimensionError("element does not live on the source lattice")
    out: dict[tuple, int] = {}
    for vals, c in x.terms.items():
        for f, d in u.terms.items():
            k = tuple(f[v] for v in vals)
            out[k] = out.get(k, 0) + c * d
    return FreeElt(x.domain_size, u.target, out)


# -- the generator of the top summand of F_Q -------------------------------------

def _meet_irr_parts(q: Lattice) -> tuple[list[int], set[int]]:
    dec = pole_decomposition(q.poset)
    if dec is None or pole_signature(q) is None:
        raise ContractError("a pole lattice is required")
    singles = {b.element for b in dec.blocks if isinstance(b, Singleton)}
    return list(q.irr.meet_irr), singles


def omega_map(q: Lattice) -> LatticeMap:
    """``omega : E^0 -> Q`` sending comparable meet-irreducibles to ``s(e)``
    and fixing twins; a bijection onto the join-irreducibles."""
    e0, singles = _meet_irr_parts(q)
    s = q.irr.s_map
    return LatticeMap(GroundSet(len(e0)), q, tuple(s[e] if e in singles else e for e in e0))


def gamma_opposite(q: Lattice) -> FreeElt:
    """``gamma_{Q^op}`` in ``F_Q(E^0)``: ``eta_A(e) = s(e)`` on ``A``, ``e`` off it."""
    e0, _ = _meet_irr_parts(q)
    s = q.irr.s_map
    n = len(e0)
    terms = {}
    for mask in range(1 << n):
        vals = tuple(s[e] if mask >> i & 1 else e for i, e in enumerate(e0))
        terms[vals] = -1 if bin(mask).count("1") % 2 else 1
    return FreeElt(n, q, terms)


# -- the pole part of F_T(X) ---------------------------------------------------

@dataclass(frozen=True)
class SpanRecord:
    lattice: str
    set_size: int
    maps: int
    rank_idempotent_image: int
    rank_pole_maps: int
    rank_joint: int

    @property
    def ok(self) -> bool:
        return self.rank_idempotent_image == self.rank_pole_maps == self.rank_joint


def _has_pole_image(t: Lattice, vals: Sequence[int]) -> bool:
    return pole_decomposition(t.poset.induced(sorted(set(vals)))) is not None


def pole_span_check(t: Lattice, m: int, idem: Optional[LinMorph] = None) -> SpanRecord:
    """Compare the span of ``e_T . phi`` with the span of maps whose image is a pole subposet."""
    maps = list(all_maps(t, m))
    col = {v: i for i, v in enumerate(maps)}
    idem = idem if idem is not None else e_T(t)
    g = GroundSet(m)
    a_rows = []
    for v in maps:
        img = apply_linmorph(idem, FreeElt.single(LatticeMap(g, t, v)))
        a_rows.append({col[k]: c for k, c in img.terms.items()})
    b_rows = [{col[v]: 1} for v in maps if _has_pole_image(t, v)]
    a, b = IntMatrix(a_rows, len(maps)), IntMatrix(b_rows, len(maps))
    _, ra, rb, rab = row_spaces_equal(a, b)
    return SpanRecord(t.name or f"n={t.size}", m, len(maps), ra, rb, rab)
