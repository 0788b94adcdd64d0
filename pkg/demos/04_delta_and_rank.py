"""The relation-algebra side: delta, its square, and the rank of S_Q(X).

For a pole poset the element delta squares to a signed twin-swap multiple of
itself; for other posets no relation S makes delta S delta nonzero.
"""
from polelattice import delta, delta_square_identity, enumerate_posets, nonzero_condition, pole_decomposition
from polelattice import pole_lattice, rank_SQ, z_basis
from polelattice.lattices import enumerate_pole_signatures

for p in enumerate_posets(3):
    dec = pole_decomposition(p)
    line = f"{str(p.matrix_strings()):<28} {len(delta(p))} terms"
    if dec is not None:
        rec = delta_square_identity(p)
        line += f", |E1|={rec.singleton_count}, square identity {rec.square_matches}"
    line += f", some S with delta S delta != 0: {nonzero_condition(p)}"
    print(line)

print("\nrank of S_Q(X) against the covering maps, |X| = 0..4")
for sig in enumerate_pole_signatures(5):
    q = pole_lattice(sig)
    ranks = [rank_SQ(q, m) for m in range(5)]
    assert ranks == [len(z_basis(q, m)) for m in range(5)]
    print(f"  [{sig}]".ljust(14), ranks)
