"""Lattices that are not pole lattices only see part of End(T).

For M3 and N5 the f-elements span the endomorphisms whose image is a pole
subposet, and nothing more. The script compares both counts for every
lattice on at most six elements.
"""
from polelattice import decomposition_report, diamond_m3, enumerate_lattices, pentagon_n5

for t in (diamond_m3(), pentagon_n5()):
    rep = decomposition_report(t)
    print(f"{t.name}: {rep.summary()}")
    print(f"    pole-image endomorphisms {rep.dim_check_direct} of {rep.endomorphisms}")

print("\n  n  lattices  fully covered")
for n in range(1, 7):
    lats = enumerate_lattices(n)
    reports = [decomposition_report(t) for t in lats]
    full = sum(1 for r in reports if r.dim_pole_part == r.endomorphisms)
    print(f"{n:3d}{len(lats):10d}{full:15d}")
