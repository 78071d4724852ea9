"""Separating two elements by a finite congruence.

Every pair of distinct elements of a finite monoid can be pulled apart by a
two-sided congruence; the witness records which route was used.

Run:  python demos/separating_pairs.py
"""
from itertools import combinations

from rfmonoid import green_structure, mgn, separate
from rfmonoid.fixtures import cyclic_group

G = cyclic_group(2)
M = mgn(G, [0, 1])
print("order", M.size, "names", [M.name(x) for x in M.elements])
print("J-classes", [[M.name(x) for x in c] for c in green_structure(M).j.classes()])

routes = {}
for x, y in combinations(M.elements, 2):
    w = separate(M, x, y)
    routes[w.route] = routes.get(w.route, 0) + 1
print("routes used over all pairs:", routes)

# The interesting pair shares an H-class, so no L- or R-based split works.
h, ha = M.index_of("h"), M.index_of("ha")
print(separate(M, h, ha).describe(M))
