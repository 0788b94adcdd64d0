"""Integer linear combinations of join-morphisms and the idempotent calculus
built from Möbius-weighted sections ``j^pi`` of surjections onto pole lattices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Mapping, Optional, Union

from .errors import ContractError, DimensionError, ResourceGuardError
from .lattices import Lattice, mobius, pole_signature
from .morphisms import JoinMorphism, _extend, op_morphism
from .posets import Singleton, pole_decomposition
from .relations import Permutation

__all__ = [
    "COEFF_BOUND",
    "LinMorph",
    "lin_compose",
    "BFamily",
    "b_family",
    "j_A",
    "j_pi",
    "rho_Y",
    "rho_sum",
    "f_general",
    "f_idem",
    "e_T",
    "epsilon_Q",
    "beta",
    "as_morphism",
]

COEFF_BOUND = 1 << 63
MAX_FAMILIES = 10 ** 7


def _checked(c: int) -> int:
    if not -COEFF_BOUND < c < COEFF_BOUND:
        raise OverflowError(f"coefficient {c} leaves the signed 64-bit range")
    return c


class LinMorph:
    """A finitely supported ``Z``-combination of join-morphisms ``source -> target``.

    Terms are keyed by the map tuple; zero coefficients are never stored.
    """

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: Lattice, target: Lattice, terms: Optional[Mapping[tuple, int]] = None):
        self.source = source
        self.target = target
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            if len(m) != source.size:
                raise DimensionError("term map has the wrong length")
            if c:
                clean[m] = _checked(int(c))
        self.terms = clean

    @classmethod
    def zero(cls, source: Lattice, target: Lattice) -> "LinMorph":
        return cls(source, target)

    @classmethod
    def single(cls, f: JoinMorphism, coeff: int = 1) -> "LinMorph":
        return cls(f.source, f.target, {f.map: coeff})

    @classmethod
    def identity(cls, t: Lattice) -> "LinMorph":
        return cls(t, t, {tuple(range(t.size)): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, f) -> int:
        key = f.map if isinstance(f, JoinMorphism) else tuple(f)
        return self.terms.get(key, 0)

    def morphisms(self) -> list[tuple[JoinMorphism, int]]:
        return [(JoinMorphism(self.source, self.target, m), c) for m, c in sorted(self.terms.items())]

    def _same_shape(self, other: "LinMorph") -> None:
        if self.source != other.source or self.target != other.target:
            raise DimensionError("linear combinations live in different hom-sets")

    def __add__(self, other: "LinMorph") -> "LinMorph":
        self._same_shape(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return LinMorph(self.source, self.target, out)

    def __neg__(self) -> "LinMorph":
        return LinMorph(self.source, self.target, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "LinMorph") -> "LinMorph":
        return self + (-other)

    def scale(self, k: int) -> "LinMorph":
        return LinMorph(self.source, self.target, {m: k * c for m, c in self.terms.items()})

    def __rmul__(self, k: int) -> "LinMorph":
        return self.scale(k)

    def __matmul__(self, other: "LinMorph") -> "LinMorph":
        return lin_compose(self, other)

    def reduce(self, modulus: int) -> "LinMorph":
        """Coefficients reduced into ``[0, modulus)``."""
        if modulus < 1:
            raise ValueError("modulus must be positive")
        return LinMorph(self.source, self.target, {m: c % modulus for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, LinMorph) and self.terms == other.terms
                and self.source == other.source and self.target == other.target)

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*{list(m)}" for m, c in sorted(self.terms.items())) or "0"
        return f"LinMorph({body})"


def as_morphism(x: Union[JoinMorphism, LinMorph]) -> LinMorph:
    return x if isinstance(x, LinMorph) else LinMorph.single(x)


def lin_compose(u, v) -> LinMorph:
    """``u o v``, bilinear with collection of equal composites."""
    u, v = as_morphism(u), as_morphism(v)
    if v.target != u.source:
        raise DimensionError("cannot compose: target of v is not the source of u")
    out: dict[tuple, int] = {}
    for g, c in v.terms.items():
        for f, d in u.terms.items():
            key = tuple(f[i] for i in g)
            out[key] = out.get(key, 0) + c * d
    return LinMorph(v.source, u.target, out)


# -- sections of surjections onto pole lattices -------------------------------

@dataclass(frozen=True, eq=False)
class BFamily:
    pi: JoinMorphism
    b: tuple[int, ...]
    E1: tuple[int, ...]
    E2: tuple[int, ...]
    b_minus: dict = field(default_factory=dict)
    b_plus: dict = field(default_factory=dict)

    @property
    def E(self) -> tuple[int, ...]:
        return tuple(sorted(self.E1 + self.E2))


def _pole_parts(p: Lattice) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Irreducibles of a pole lattice split into the comparable part and the twins."""
    if pole_signature(p) is None:
        raise ContractError("target must be a pole lattice")
    dec = pole_decomposition(p.poset)
    singles = {b.element for b in dec.blocks if isinstance(b, Singleton)}
    irr = p.irr.irr
    e1 = tuple(e for e in irr if e in singles)
    e2 = tuple(e for e in irr if e not in singles)
    return e1, e2


def b_family(pi: JoinMorphism) -> BFamily:
    p = pi.target
    if not pi.is_surjective():
        raise ContractError("b_family needs a surjective join-morphism")
    e1, e2 = _pole_parts(p)
    b = op_morphism(pi).map
    r, s = p.irr.r_map, p.irr.s_map
    bm, bp = {}, {}
    for e in e1:
        bm[e], bp[e] = b[r[e]], b[e]
    for e in e2:
        bm[e], bp[e] = b[e], b[s[e]]
    return BFamily(pi, b, e1, e2, bm, bp)


def j_A(pi: JoinMorphism, a: Mapping[int, int], fam: Optional[BFamily] = None) -> JoinMorphism:
    """The join-morphism ``P -> T`` extending ``e -> a_e`` from the irreducibles."""
    fam = fam or b_family(pi)
    t, p = pi.source, pi.target
    for e in fam.E:
        if e not in a or not (t.le(fam.b_minus[e], a[e]) and t.le(a[e], fam.b_plus[e])):
            raise ContractError(f"a_{e} must lie in [b_e^-, b_e^+]")
    return JoinMorphism(p, t, _extend(p, t, a))


_J_CACHE: dict[tuple, dict] = {}


def j_pi(pi: JoinMorphism) -> LinMorph:
    """``(-1)^|E1| sum_A mu(B^-, A) j_A``, collected over equal morphisms."""
    t, p = pi.source, pi.target
    key = (t.key(), p.key(), pi.map)
    hit = _J_CACHE.get(key)
    if hit is not None:
        return LinMorph(p, t, hit)
    fam = b_family(pi)
    E = fam.E
    choices = []
    total = 1
    for e in E:
        lo, hi = fam.b_minus[e], fam.b_plus[e]
        opts = [(x, mobius(t, lo, x)) for x in t.interval(lo, hi)]
        opts = [(x, w) for x, w in opts if w]
        choices.append(opts)
        total *= len(opts)
    if total > MAX_FAMILIES:
        raise ResourceGuardError(f"{total} families exceed the bound {MAX_FAMILIES}")
    sign = -1 if len(fam.E1) % 2 else 1
    out: dict[tuple, int] = {}
    for pick in product(*choices):
        weight = sign
        a = {}
        for e, (x, w) in zip(E, pick):
            weight *= w
            a[e] = x
        m = _extend(p, t, a)
        out[m] = out.get(m, 0) + weight
    res = LinMorph(p, t, out)
    _J_CACHE[key] = dict(res.terms)
    return res


def rho_Y(p: Lattice, Y: Iterable[int]) -> JoinMorphism:
    """Fix ``Y``, push the other comparable irreducibles down to ``r(e)`` and
    the other twins up to ``s(e)``; extend to ``P``."""
    e1, e2 = _pole_parts(p)
    Y = set(Y)
    if not Y <= set(e1) | set(e2):
        raise ContractError("Y must be a set of irreducibles")
    r, s = p.irr.r_map, p.irr.s_map
    phi = {}
    for e in e1:
        phi[e] = e if e in Y else r[e]
    for e in e2:
        phi[e] = e if e in Y else s[e]
    return JoinMorphism(p, p, _extend(p, p, phi))


def rho_sum(p: Lattice) -> LinMorph:
    """``sum_Y (-1)^|E - Y| rho_Y`` over all subsets ``Y`` of the irreducibles."""
    E = p.irr.irr
    out = LinMorph.zero(p, p)
    for k in range(len(E) + 1):
        for Y in combinations(E, k):
            out = out + LinMorph.single(rho_Y(p, Y), (-1) ** (len(E) - k))
    return out


def _auto_map(p: Lattice, tau) -> JoinMorphism:
    if isinstance(tau, JoinMorphism):
        return tau
    if isinstance(tau, Permutation):
        return JoinMorphism(p, p, tau.image)
    return JoinMorphism(p, p, tuple(tau))


def f_general(chi: JoinMorphism, tau, theta: JoinMorphism) -> LinMorph:
    """``j^chi o tau o theta : T -> T``."""
    if chi.target != theta.target or chi.source != theta.source:
        raise DimensionError("chi and theta must be surjections T -> P with the same P")
    p = chi.target
    tm = _auto_map(p, tau)
    mid = JoinMorphism(theta.source, p, tuple(tm.map[v] for v in theta.map))
    return lin_compose(j_pi(chi), LinMorph.single(mid))


def f_idem(pi: JoinMorphism) -> LinMorph:
    return f_general(pi, tuple(range(pi.target.size)), pi)


def e_T(t: Lattice) -> LinMorph:
    """Sum of ``f_{pi,id,pi}`` over all pole quotients and orbit representatives."""
    from .decompose import _pole, orbit_reps, pol_T

    out = LinMorph.zero(t, t)
    for sig in pol_T(t):
        for pi in orbit_reps(t, _pole(sig)):
            out = out + f_idem(pi)
    return out


def beta(q: Lattice, p: Lattice) -> LinMorph:
    from .decompose import orbit_reps

    out = LinMorph.zero(q, q)
    for pi in orbit_reps(q, p):
        out = out + f_idem(pi)
    return out


def epsilon_Q(q: Lattice) -> LinMorph:
    if pole_signature(q) is None:
        raise ContractError("epsilon is defined for pole lattices")
    return beta(q, q)
