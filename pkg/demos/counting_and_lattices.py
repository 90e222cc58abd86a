"""Counting permutrees, then walking their lattice.

A decoration word picks the shape of every node.  All NONE letters give
chains, one per permutation, while all DOWN letters give binary search trees.
This walk counts a few words two ways and then looks at the rotation lattice
of a mixed word.
"""

from permutrees import count, enumerate_permutrees
from permutrees.lattice import class_max, class_min, extremes, lattice_join, lattice_meet

for word in ("oooo", "dddd", "dudu", "bbbb"):
    fast = count(word)
    slow = len(enumerate_permutrees(word))
    print(f"{word}: {fast} permutrees (recurrence), {slow} by listing them")

word = "odub"
trees = enumerate_permutrees(word)
bottom, top = extremes(word)
print(f"\n{word} has {len(trees)} trees; bottom {bottom}, top {top}")

# every tree is a whole interval of permutations
t = trees[len(trees) // 2]
print(f"{t} covers permutations {class_min(t)} .. {class_max(t)}")

a, b = trees[1], trees[-2]
print(f"meet of {a}\n    and {b}\n     is {lattice_meet(a, b)}")
print(f"join is {lattice_join(a, b)}")
