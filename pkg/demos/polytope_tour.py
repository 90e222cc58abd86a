"""From trees to points.

Each permutree becomes an integer point, and together they are the vertices
of a polytope.  Below we list the vertices for a small word and then compare
face numbers and symmetry across a few words.
"""

from permutrees.enumeration import f_vector, h_vector
from permutrees.geometry import isometry_formula, isometry_group_order, parallel_facets, polytope

poly = polytope("odu")
for t, point in sorted(poly.vertices.items(), key=lambda kv: kv[1]):
    print(point, t)

for word in ("oooo", "dddd", "bbbb", "odbo"):
    print(f"{word}: f = {f_vector(word)}, h = {h_vector(word)}, parallel facet pairs = {len(parallel_facets(word))}")

# the closed formula against an actual search over coordinate symmetries
for word in ("oooo", "oddo", "oduo", "obbo"):
    print(f"{word}: isometries {isometry_formula(word)} (formula), {isometry_group_order(word)} (search)")
