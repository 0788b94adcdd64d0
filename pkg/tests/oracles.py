"""Slow, obviously-correct reference implementations used to cross-check the library.

Everything here works on a plain order matrix ``leq[i][j]`` (``i <= j``) and
never calls into :mod:`polelattice` algorithms.
"""
from __future__ import annotations

from itertools import permutations, product


def leq_matrix(t) -> list[list[bool]]:
    """Order matrix of a library lattice or poset (input data only)."""
    p = getattr(t, "poset", t)
    return [[p.le(i, j) for j in range(p.size)] for i in range(p.size)]


# -- posets ---------------------------------------------------------------

def is_order(leq) -> bool:
    n = len(leq)
    for i in range(n):
        if not leq[i][i]:
            return False
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                return False
            for k in range(n):
                if leq[i][j] and leq[j][k] and not leq[i][k]:
                    return False
    return True


def canon(leq) -> tuple:
    n = len(leq)
    return min(tuple(leq[p[i]][p[j]] for i in range(n) for j in range(n)) for p in permutations(range(n)))


def count_posets(n: int) -> int:
    """Posets on ``n`` points up to isomorphism, by extending each class one point at a time."""
    if n == 0:
        return 1
    layer = {canon([[True]]): [[True]]}
    for m in range(1, n):
        nxt = {}
        for leq in layer.values():
            for below in range(1 << m):
                for above in range(1 << m):
                    if below & above:
                        continue
                    new = [row[:] + [bool(above >> i & 1)] for i, row in enumerate(leq)]
                    new.append([bool(below >> j & 1) for j in range(m)] + [True])
                    if is_order(new):
                        nxt.setdefault(canon(new), new)
        layer = nxt
    return len(layer)


def permutation_criterion(leq) -> list[tuple[int, ...]]:
    """All ``tau`` with ``y not<= a  =>  a <= tau(y)`` for all ``a, y``."""
    n = len(leq)
    good = []
    for tau in permutations(range(n)):
        if all(leq[y][a] or leq[a][tau[y]] for a in range(n) for y in range(n)):
            good.append(tau)
    return good


def is_pole(leq) -> bool:
    return bool(permutation_criterion(leq))


def automorphisms(leq) -> list[tuple[int, ...]]:
    n = len(leq)
    return [s for s in permutations(range(n))
            if all(leq[i][j] == leq[s[i]][s[j]] for i in range(n) for j in range(n))]


def induced(leq, elems) -> list[list[bool]]:
    elems = sorted(elems)
    return [[leq[a][b] for b in elems] for a in elems]


# -- lattices -------------------------------------------------------------

class Lat:
    """Brute-force lattice operations from an order matrix."""

    def __init__(self, leq):
        self.leq = leq
        self.n = n = len(leq)
        self.join = [[self._bound(i, j, up=True) for j in range(n)] for i in range(n)]
        self.bottom = next(x for x in range(n) if all(leq[x][y] for y in range(n)))

    def _bound(self, i, j, up):
        if up:
            cands = [z for z in range(self.n) if self.leq[i][z] and self.leq[j][z]]
            return next(z for z in cands if all(self.leq[z][w] for w in cands))
        cands = [z for z in range(self.n) if self.leq[z][i] and self.leq[z][j]]
        return next(z for z in cands if all(self.leq[w][z] for w in cands))

    def join_all(self, xs):
        acc = self.bottom
        for x in xs:
            acc = self.join[acc][x]
        return acc

    def irreducibles(self) -> list[int]:
        out = []
        for e in range(self.n):
            below = [x for x in range(self.n) if x != e and self.leq[x][e]]
            if e != self.bottom and self.join_all(below) != e:
                out.append(e)
        return out

    def mobius(self, x, y) -> int:
        """Recursion from the top end: ``mu(x, y) = -sum_{x < z <= y} mu(z, y)``."""
        memo = {}

        def mu(a):
            if a in memo:
                return memo[a]
            if a == y:
                v = 1
            else:
                v = -sum(mu(z) for z in range(self.n) if z != a and self.leq[a][z] and self.leq[z][y])
            memo[a] = v
            return v

        return mu(x) if self.leq[x][y] else 0


def is_lattice(leq) -> bool:
    n = len(leq)
    for i in range(n):
        for j in range(n):
            ups = [z for z in range(n) if leq[i][z] and leq[j][z]]
            if not any(all(leq[z][w] for w in ups) for z in ups):
                return False
            downs = [z for z in range(n) if leq[z][i] and leq[z][j]]
            if not any(all(leq[w][z] for w in downs) for z in downs):
                return False
    return n > 0


def homs(s: Lat, t: Lat) -> list[tuple[int, ...]]:
    """All join-morphisms by filtering every map."""
    out = []
    for f in product(range(t.n), repeat=s.n):
        if f[s.bottom] != t.bottom:
            continue
        if all(f[s.join[x][y]] == t.join[f[x]][f[y]] for x in range(s.n) for y in range(x + 1, s.n)):
            out.append(f)
    return out


def pole_image_count(t: Lat) -> int:
    return sum(1 for f in iter_homs(t, t) if is_pole(induced(t.leq, set(f))))


def pole_lattice_leq(sig) -> list[list[bool]]:
    level = []
    for k, s in enumerate(sig):
        level += [k] * s
    n = len(level)
    return [[i == j or level[i] < level[j] for j in range(n)] for i in range(n)]


def orbit_count(t: Lat, p: Lat) -> tuple[int, int]:
    """``(n(T, P), |Aut P|)`` by counting surjections and dividing by the free action."""
    sur = [f for f in homs(t, p) if len(set(f)) == p.n]
    aut = automorphisms(p.leq)
    orbits = {min(tuple(a[v] for v in f) for a in aut) for f in sur}
    return len(orbits), len(aut)


# -- linear combinations of maps ----------------------------------------------

def lin_compose(u: dict, v: dict) -> dict:
    out: dict = {}
    for g, c in v.items():
        for f, d in u.items():
            k = tuple(f[i] for i in g)
            out[k] = out.get(k, 0) + c * d
    return {k: c for k, c in out.items() if c}


def j_pi(t: Lat, p: Lat, pi: tuple[int, ...]) -> dict:
    """Moebius-weighted section of a surjection onto a pole lattice, from scratch."""
    b = [t.join_all([x for x in range(t.n) if p.leq[pi[x]][q]]) for q in range(p.n)]
    irr = p.irreducibles()
    twin = {e for e in irr if any(not p.leq[e][f] and not p.leq[f][e] for f in range(p.n))}
    bounds = {}
    for e in irr:
        if e in twin:
            above = [x for x in range(p.n) if x != e and p.leq[e][x]]
            s = next(x for x in above if all(p.leq[x][w] for w in above))
            bounds[e] = (b[e], b[s])
        else:
            below = [x for x in range(p.n) if x != e and p.leq[x][e]]
            r = p.join_all(below)
            bounds[e] = (b[r], b[e])
    sign = -1 if (len(irr) - len(twin)) % 2 else 1
    choices = []
    for e in irr:
        lo, hi = bounds[e]
        choices.append([(a, t.mobius(lo, a)) for a in range(t.n) if t.leq[lo][a] and t.leq[a][hi]])
    out: dict = {}
    for pick in product(*choices):
        w = sign
        a = {}
        for e, (x, m) in zip(irr, pick):
            w *= m
            a[e] = x
        f = tuple(t.join_all([a[e] for e in irr if p.leq[e][q]]) for q in range(p.n))
        out[f] = out.get(f, 0) + w
    return {k: c for k, c in out.items() if c}


def z_basis_count(q: Lat, m: int) -> int:
    need = set(q.irreducibles())
    return sum(1 for f in product(range(q.n), repeat=m) if need <= set(f))


def iter_homs(s: Lat, t: Lat):
    """Join-morphisms by assigning values element by element and checking every pair."""
    order = sorted(range(s.n), key=lambda x: sum(s.leq[y][x] for y in range(s.n)))
    f = [None] * s.n

    def ok(x):
        for a in range(s.n):
            for b in range(a, s.n):
                j = s.join[a][b]
                if x not in (a, b, j) or f[a] is None or f[b] is None or f[j] is None:
                    continue
                if f[j] != t.join[f[a]][f[b]]:
                    return False
        return True

    def go(i):
        if i == s.n:
            yield tuple(f)
            return
        x = order[i]
        for v in range(t.n):
            f[x] = v
            if (x != s.bottom or v == t.bottom) and ok(x):
                yield from go(i + 1)
        f[x] = None

    return go(0)


def count_homs(s: Lat, t: Lat) -> int:
    return sum(1 for _ in iter_homs(s, t))
