"""Pole quotients of a lattice, orbit representatives, and the block
decomposition of the subalgebra of ``End(T)`` spanned by endomorphisms with
pole image.  Also hosts the identity checks run by ``verify_suite``.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Callable, Optional

from .errors import ConsistencyError
from .klin import (
    LinMorph,
    beta,
    e_T,
    epsilon_Q,
    f_general,
    j_pi,
    lin_compose,
    rho_sum,
)
from .lattices import Lattice, PoleSignature, enumerate_pole_signatures, pole_lattice, pole_signature
from .linalg import IntMatrix
from .morphisms import (
    JoinMorphism,
    enumerate_hom,
    enumerate_inj,
    enumerate_sur,
    omega,
    op_morphism,
)
from .posets import automorphisms, pole_decomposition

__all__ = [
    "pol_T",
    "aut_maps",
    "orbit_reps",
    "DecompositionEntry",
    "DecompositionReport",
    "decomposition_report",
    "f_elements",
    "product_law_failures",
    "CheckResult",
    "SUITES",
    "verify_suite",
    "has_pole_image",
    "algebra_label",
]


_POLE_CACHE: dict[tuple, Lattice] = {}


def _pole(sig: PoleSignature) -> Lattice:
    hit = _POLE_CACHE.get(sig.level_sizes)
    if hit is None:
        hit = _POLE_CACHE[sig.level_sizes] = pole_lattice(sig)
    return hit


def pol_T(t: Lattice) -> list[PoleSignature]:
    """Signatures of the pole lattices that ``T`` maps onto, in lexicographic order."""
    return [sig for sig in enumerate_pole_signatures(t.size) if enumerate_sur(t, _pole(sig))]


def aut_maps(p: Lattice) -> list[tuple[int, ...]]:
    return [s.image for s in automorphisms(p.poset)]


_ORBIT_CACHE: dict[tuple, tuple] = {}


def orbit_reps(t: Lattice, p: Lattice) -> list[JoinMorphism]:
    """Lexicographically least member of each ``Aut(P)``-orbit on ``Sur(T, P)``."""
    key = (t.key(), p.key())
    hit = _ORBIT_CACHE.get(key)
    if hit is None:
        auts = aut_maps(p)
        remaining = {m.map for m in enumerate_sur(t, p)}
        reps = []
        for m in sorted(remaining):
            if m not in remaining:
                continue
            orbit = {tuple(s[v] for v in m) for s in auts}
            if len(orbit) != len(auts) or not orbit <= remaining:
                raise ConsistencyError("automorphisms do not act freely on surjections")
            remaining -= orbit
            reps.append(m)
        hit = _ORBIT_CACHE[key] = tuple(reps)
    return [JoinMorphism(t, p, m) for m in hit]


def has_pole_image(t: Lattice, m) -> bool:
    return pole_decomposition(t.poset.induced(sorted(set(m)))) is not None


def algebra_label(n: int, aut_order: int) -> str:
    k = aut_order.bit_length() - 1
    ring = "k" if k == 0 else "kC2" if k == 1 else f"k(C2^{k})"
    return f"M_{n}({ring})"


@dataclass(frozen=True)
class DecompositionEntry:
    signature: tuple[int, ...]
    n: int
    aut_order: int
    orbit_reps: tuple[tuple[int, ...], ...]
    injections: int
    surjections: int

    @property
    def dim(self) -> int:
        return self.n * self.n * self.aut_order


@dataclass(frozen=True)
class DecompositionReport:
    name: str
    size: int
    entries: tuple[DecompositionEntry, ...]
    dim_pole_part: int
    dim_check_direct: int
    endomorphisms: int
    is_pole: bool

    @property
    def consistent(self) -> bool:
        return self.dim_pole_part == self.dim_check_direct and all(
            e.injections == e.surjections for e in self.entries)

    def summary(self) -> str:
        blocks = " ⊕ ".join(algebra_label(e.n, e.aut_order) for e in self.entries)
        return f"{blocks}, dim {self.dim_pole_part}"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["consistent"] = self.consistent
        d["summary"] = self.summary()
        for e in d["entries"]:
            e["signature"] = list(e["signature"])
            e["orbit_reps"] = [list(m) for m in e["orbit_reps"]]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "DecompositionReport":
        entries = tuple(
            DecompositionEntry(tuple(e["signature"]), e["n"], e["aut_order"],
                               tuple(tuple(m) for m in e["orbit_reps"]), e["injections"], e["surjections"])
            for e in d["entries"])
        return cls(d["name"], d["size"], entries, d["dim_pole_part"], d["dim_check_direct"],
                   d["endomorphisms"], d["is_pole"])


def decomposition_report(t: Lattice) -> DecompositionReport:
    entries = []
    for sig in pol_T(t):
        p = _pole(sig)
        reps = orbit_reps(t, p)
        entries.append(DecompositionEntry(
            sig.level_sizes, len(reps), len(aut_maps(p)), tuple(r.map for r in reps),
            len(enumerate_inj(p, t)), len(enumerate_sur(t, p))))
    ends = enumerate_hom(t, t)
    direct = sum(1 for f in ends if has_pole_image(t, f.map))
    return DecompositionReport(
        t.name or f"lattice(n={t.size})", t.size, tuple(entries),
        sum(e.dim for e in entries), direct, len(ends), pole_signature(t) is not None)


# -- f-elements and their relations -------------------------------------------

def _blocks(t: Lattice):
    for sig in pol_T(t):
        p = _pole(sig)
        yield p, orbit_reps(t, p), aut_maps(p)


def f_elements(t: Lattice) -> list[tuple[tuple, LinMorph]]:
    """``((signature, chi, tau, theta), f_{chi,tau,theta})`` for the whole basis."""
    out = []
    for p, reps, auts in _blocks(t):
        sig = pole_signature(p).level_sizes
        for chi in reps:
            for tau in auts:
                for theta in reps:
                    out.append(((sig, chi.map, tau, theta.map), f_general(chi, tau, theta)))
    return out


def _after(tau, pi: JoinMorphism) -> JoinMorphism:
    return JoinMorphism(pi.source, pi.target, tuple(tau[v] for v in pi.map))


def product_law_failures(t: Lattice, literal: bool = False, limit: int = 10) -> tuple[int, list[str]]:
    """Check ``f_{chi,tau,theta} f_{pi,sigma,kappa}`` against the matrix-unit rule.

    With ``literal`` every product is formed in full.  Otherwise the common
    right factor ``sigma kappa`` is cancelled: it is a surjective join-morphism,
    so ``u -> u o (sigma kappa)`` is injective on combinations, and the rule is
    equivalent to ``j^chi tau theta j^pi`` being ``j^chi tau`` when ``theta = pi``
    and ``0`` otherwise.
    """
    blocks = list(_blocks(t))
    checked, bad = 0, []
    for p, reps_p, auts_p in blocks:
        for q, reps_q, auts_q in blocks:
            same = p is q
            for theta in reps_p:
                for pi in reps_q:
                    middle = lin_compose(LinMorph.single(theta), j_pi(pi))  # Q -> P
                    for chi in reps_p:
                        jc = j_pi(chi)
                        for tau in auts_p:
                            left = lin_compose(jc, LinMorph.single(JoinMorphism(p, p, tau)))
                            if literal:
                                for sigma in auts_q:
                                    for kappa in reps_q:
                                        lhs = lin_compose(f_general(chi, tau, theta), f_general(pi, sigma, kappa))
                                        if same and theta.map == pi.map:
                                            st = tuple(tau[s] for s in sigma)
                                            rhs = f_general(chi, st, kappa)
                                        else:
                                            rhs = LinMorph.zero(t, t)
                                        checked += 1
                                        if lhs != rhs and len(bad) < limit:
                                            bad.append(f"{chi.map},{tau},{theta.map} x {pi.map},{sigma},{kappa.map}")
                            else:
                                lhs = lin_compose(left, middle)
                                rhs = left if (same and theta.map == pi.map) else LinMorph.zero(q, t)
                                checked += 1
                                if lhs != rhs and len(bad) < limit:
                                    bad.append(f"{chi.map},{tau},{theta.map} x {pi.map}")
    return checked, bad


# -- verification suites ---------------------------------------------------------

@dataclass
class CheckResult:
    suite: str
    identity: str
    lattice: str
    passed: bool
    checked: int = 0
    detail: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


def _name(t: Lattice) -> str:
    return t.name or f"lattice(n={t.size})"


def _suite_idempotents(t: Lattice) -> list[CheckResult]:
    res = []
    n1 = n2 = 0
    ok1 = ok2 = True
    for p, reps, _ in _blocks(t):
        rs = rho_sum(p)
        for pi in reps:
            j = j_pi(pi)
            pij = lin_compose(LinMorph.single(pi), j)
            ok1 &= lin_compose(j, pij) == j
            ok2 &= pij == rs
            n1 += 1
            n2 += 1
    res.append(CheckResult("idempotents", "j^pi o pi o j^pi = j^pi", _name(t), ok1, n1))
    res.append(CheckResult("idempotents", "pi o j^pi = sum_Y (-1)^|E-Y| rho_Y", _name(t), ok2, n2))
    return res


def _suite_orthogonality(t: Lattice) -> list[CheckResult]:
    checked, bad = product_law_failures(t)
    return [CheckResult("orthogonality", "f_{chi,tau,theta} f_{pi,sigma,kappa} = [theta=pi] f_{chi,tau sigma,kappa}",
                        _name(t), not bad, checked, "; ".join(bad))]


def _basis_matrix(t: Lattice, elems: list[LinMorph]) -> IntMatrix:
    col = {f.map: i for i, f in enumerate(enumerate_hom(t, t))}
    return IntMatrix([{col[m]: c for m, c in u.terms.items()} for u in elems], len(col))


def _suite_independence(t: Lattice) -> list[CheckResult]:
    elems = [u for _, u in f_elements(t)]
    rank = _basis_matrix(t, elems).rank()
    rep = decomposition_report(t)
    ok = rank == len(elems) == rep.dim_pole_part == rep.dim_check_direct
    return [CheckResult("independence", "f-elements independent, count = #pole-image endomorphisms",
                        _name(t), ok, len(elems), f"rank {rank}, elements {len(elems)}, direct {rep.dim_check_direct}")]


def _suite_dimension(t: Lattice) -> list[CheckResult]:
    rep = decomposition_report(t)
    res = [CheckResult("dimension", "sum n^2 |Aut P| = #pole-image endomorphisms", _name(t),
                       rep.consistent, len(rep.entries), rep.summary())]
    if rep.is_pole:
        res.append(CheckResult("dimension", "pole T: sum n^2 |Aut P| = #End(T)", _name(t),
                               rep.dim_pole_part == rep.endomorphisms, rep.endomorphisms))
    return res


def _suite_central(t: Lattice) -> list[CheckResult]:
    res = []
    e = e_T(t)
    ends = [LinMorph.single(f) for f in enumerate_hom(t, t)]
    ok = lin_compose(e, e) == e and all(lin_compose(f, e) == lin_compose(e, f) for f in ends)
    res.append(CheckResult("central", "e_T idempotent and central in End(T)", _name(t), ok, len(ends)))
    if pole_signature(t) is not None:
        eps = epsilon_Q(t)
        ok = lin_compose(eps, eps) == eps and all(lin_compose(f, eps) == lin_compose(eps, f) for f in ends)
        rank = _basis_matrix(t, [lin_compose(lin_compose(eps, f), eps) for f in ends]).rank()
        aut = len(aut_maps(t))
        res.append(CheckResult("central", "epsilon_Q central idempotent, dim eps End eps = |Aut Q|",
                               _name(t), ok and rank == aut, len(ends), f"dim {rank}, |Aut| {aut}"))
        betas = [beta(t, _pole(sig)) for sig in pol_T(t)]
        total = LinMorph.zero(t, t)
        for b in betas:
            total = total + b
        ok = total == LinMorph.identity(t)
        for i, b in enumerate(betas):
            ok &= lin_compose(b, b) == b
            for c in betas[i + 1:]:
                ok &= lin_compose(b, c).is_zero() and lin_compose(c, b).is_zero()
        res.append(CheckResult("central", "beta_{Q,P} orthogonal idempotents summing to id", _name(t), ok, len(betas)))
        zero_ok = True
        for i, b in enumerate(betas):
            for c in betas[i + 1:]:
                rank = _basis_matrix(t, [lin_compose(lin_compose(b, f), c) for f in ends]).rank()
                zero_ok &= rank == 0
        res.append(CheckResult("central", "dim beta_P End beta_P' = 0 for P != P'", _name(t), zero_ok, len(betas)))
    return res


def _suite_naturality(t: Lattice, others: Optional[list[Lattice]] = None) -> list[CheckResult]:
    from .lattices import boolean_lattice, chain_lattice

    others = others if others is not None else [t, chain_lattice(2), chain_lattice(3), boolean_lattice(2)]
    e = e_T(t)
    checked, ok = 0, True
    for u in others:
        eu = e_T(u)
        for a in enumerate_hom(t, u):
            al = LinMorph.single(a)
            ok &= lin_compose(al, e) == lin_compose(eu, al)
            checked += 1
    return [CheckResult("naturality", "alpha e_T = e_T' alpha", _name(t), ok, checked)]


def _suite_span(t: Lattice, max_set: int = 2) -> list[CheckResult]:
    from .functors import pole_span_check

    res = []
    e = e_T(t)
    for m in range(max_set + 1):
        if t.size ** m > 5000:
            break
        rec = pole_span_check(t, m, e)
        res.append(CheckResult("span", f"span e_T F_T(X) = span pole-image maps, |X|={m}", _name(t), rec.ok,
                               rec.maps, f"ranks {rec.rank_idempotent_image}/{rec.rank_pole_maps}/{rec.rank_joint}"))
    return res


def _suite_opposite(t: Lattice) -> list[CheckResult]:
    ends = enumerate_hom(t, t)
    ok_inv = all(op_morphism(op_morphism(f)) == f for f in ends)
    ident = tuple(range(t.size))
    ok_sec = all(tuple(f.map[v] for v in op_morphism(f).map) == ident for f in ends if f.is_surjective())
    res = [CheckResult("opposite", "(f^op)^op = f and f f^op = id for surjective f", _name(t), ok_inv and ok_sec, len(ends))]
    ok_bij, ok_omega, n = True, True, 0
    for sig in pol_T(t):
        p = _pole(sig)
        inj = enumerate_inj(p, t)
        ok_bij &= len(inj) == len(enumerate_sur(t, p))
        for lam in inj:
            ok_omega &= omega(omega(lam)) == lam
            n += 1
    res.append(CheckResult("opposite", "|Inj(P,T)| = |Sur(T,P)| and Omega o Omega = id", _name(t), ok_bij and ok_omega, n))
    return res


SUITES: dict[str, Callable[[Lattice], list[CheckResult]]] = {
    "idempotents": _suite_idempotents,
    "orthogonality": _suite_orthogonality,
    "independence": _suite_independence,
    "dimension": _suite_dimension,
    "central": _suite_central,
    "naturality": _suite_naturality,
    "span": _suite_span,
    "opposite": _suite_opposite,
}


def verify_suite(t: Lattice, suite: str = "all") -> list[CheckResult]:
    if suite == "all":
        out = []
        for fn in SUITES.values():
            out.extend(fn(t))
        return out
    if suite not in SUITES:
        raise KeyError(suite)
    return SUITES[suite](t)
