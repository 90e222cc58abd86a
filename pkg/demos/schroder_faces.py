"""Faces as trees with fat nodes.

Let nodes hold several labels and the trees describe every face of the
polytope, not just its vertices.  An ordered set partition inserts into such
a tree just as a permutation inserts into a permutree.
"""

from permutrees.enumeration import schroder_count
from permutrees.schroder import p_star, schroder_congruent, schroder_lattice

word = "doodoou"
for part in ("12|5|37|46", "125|37|46", "125|7|3|46", "125|7|46|3"):
    print(f"{part:>12} -> {p_star(part, word)}")
print("first two congruent:", schroder_congruent("12|5|37|46", "125|37|46", word))

for w in ("ooo", "ddd", "bbb"):
    lat = schroder_lattice(w)
    print(f"{w}: {schroder_count(w)} faces, lattice: {lat.is_lattice()}")
