"""Polynomial invariants and their evaluations at negative integers.

Run: python3 demos/reciprocity.py
"""

from hopfcalc.core import polynomial_invariant, reciprocity_eval
from hopfcalc.graphs import G, chromatic_character, count_compatible_pairs, path_graph
from hopfcalc.posets import P, Poset, antichain_character, count_weak_maps

if __name__ == "__main__":
    g = path_graph(list("abcd"))
    print("chromatic polynomial of the 4-path:", polynomial_invariant(G, chromatic_character, g).render())
    for n in range(1, 4):
        lhs = (-1) ** 4 * reciprocity_eval(G, chromatic_character, g, n)
        print(f"  n={n}: (-1)^4 chi(-{n}) = {lhs}, compatible pairs = {count_compatible_pairs(g, n)}")

    p = Poset.build("abc", [["a", "b"], ["a", "c"]])
    print("order polynomial of the V poset:", polynomial_invariant(P, antichain_character, p).render())
    for n in range(1, 4):
        lhs = (-1) ** 3 * reciprocity_eval(P, antichain_character, p, n)
        print(f"  n={n}: (-1)^3 chi(-{n}) = {lhs}, weak maps = {count_weak_maps(p, n)}")
