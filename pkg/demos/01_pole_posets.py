"""Which small posets are pole posets?

Walks through the poset enumerator, the block peel and the permutation
criterion, then prints the pole posets of size four with their twin swaps.
"""
from polelattice import enumerate_posets, is_pole_by_permutation, pole_decomposition
from polelattice.posets import TwinPair


def describe(dec) -> str:
    parts = []
    for b in dec.blocks:
        parts.append("{%s,%s}" % b.members if isinstance(b, TwinPair) else str(b.members[0]))
    return " < ".join(parts)


for n in range(1, 6):
    posets = enumerate_posets(n)
    poles = [p for p in posets if pole_decomposition(p) is not None]
    agree = all((pole_decomposition(p) is None) == (is_pole_by_permutation(p) is None) for p in posets)
    print(f"n={n}: {len(posets):3d} posets, {len(poles):2d} pole posets, recognisers agree: {agree}")

print("\npole posets on four points (bottom to top):")
for p in enumerate_posets(4):
    dec = pole_decomposition(p)
    if dec is not None:
        print(f"  {describe(dec):<16} tau = {list(dec.tau().image)}")
