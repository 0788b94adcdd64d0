"""The endomorphism algebra of the Boolean square, block by block.

B2 = {0, a, b, 1} is itself a pole lattice, so its 16 join-endomorphisms
split completely into matrix blocks indexed by the pole lattices it maps onto.
"""
from polelattice import boolean_lattice, decomposition_report, enumerate_hom, f_elements, j_pi, pole_lattice
from polelattice.decompose import orbit_reps, pol_T

t = boolean_lattice(2)
print(f"{t.name}: {len(enumerate_hom(t, t))} join-endomorphisms")

for sig in pol_T(t):
    p = pole_lattice(sig)
    reps = orbit_reps(t, p)
    print(f"\nquotient [{sig}]: {len(reps)} orbit representative(s)")
    for pi in reps:
        print(f"  pi = {list(pi.map)}")
        for m, c in sorted(j_pi(pi).terms.items()):
            print(f"    {c:+d} * {list(m)}")

rep = decomposition_report(t)
print("\n" + rep.summary())
print(f"{len(f_elements(t))} f-elements span the whole algebra")
