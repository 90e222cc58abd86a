"""Multiplying trees.

Permutrees of any decorations multiply: the product of two trees is the sum
of an interval of trees on the concatenated word.  Expanding every tree into
its linear extensions turns that product into a shuffle of words, which is
how we double-check it.
"""

from permutrees.correspond import p_symbol
from permutrees.hopf import FormalSum, P_in_F, fq_product, p_coproduct_sum, p_product, to_F, tree_name

a = p_symbol((2, 1), "du")
b = p_symbol((1, 2), "ob")
product = FormalSum(p_product(a, b))
print(f"{tree_name(a)} * {tree_name(b)} = {product.format(tree_name)}")
print("matches the shuffle of fibers:", to_F(product) == fq_product(P_in_F(a), P_in_F(b)))

t = p_symbol((1, 3, 2), "odo")
print(f"\ncoproduct of {tree_name(t)}:")
for (left, right), c in sorted(p_coproduct_sum(t).items(), key=lambda kv: (tree_name(kv[0][0]), tree_name(kv[0][1]))):
    print(f"  {c} x {tree_name(left)} (x) {tree_name(right)}")
