"""Green's relations of the transformation monoid on two points.

Run:  python demos/green_and_eggbox.py
"""
from rfmonoid import green_structure, maximal_subgroups, schutzenberger_group
from rfmonoid.fixtures import t2
from rfmonoid.io import export_eggbox_dot

M = t2()
print("elements:", [M.name(x) for x in M.elements])

# Green's relations come out as partitions of the element indices.
gs = green_structure(M)
for key, part in [("R", gs.r), ("L", gs.l), ("H", gs.h), ("D", gs.d)]:
    print(key, [[M.name(x) for x in c] for c in part.classes()])

# The two permutations form the only non-trivial group H-class.
for H, e in maximal_subgroups(M):
    print("group H-class", [M.name(x) for x in H], "identity", M.name(e))

# Schutzenberger groups act regularly, so their order matches |H|.
for H in gs.h.classes():
    print([M.name(x) for x in H], "-> Gamma order", schutzenberger_group(M, H).order)

# Pipe this into `dot -Tsvg` to draw the eggbox picture.
print(export_eggbox_dot(M))
