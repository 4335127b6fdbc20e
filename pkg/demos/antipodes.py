"""Antipodes in several families, each checked against Takeuchi's formula.

Run: python3 demos/antipodes.py
"""

from hopfcalc.buildsets import F, PI, PathSet, SetPartition
from hopfcalc.core import takeuchi_antipode
from hopfcalc.graphs import G, SG, complete_graph, path_graph
from hopfcalc.hypergraphs import HG, Hypergraph
from hopfcalc.matroids import M, uniform


def show(name, fam, x):
    s = fam.antipode(x)
    t, raw = takeuchi_antipode(fam, x, with_count=True)
    status = "agrees" if s == t else "DISAGREES"
    print(f"{name}: {len(s)} terms after cancellation ({raw} before), {status} with Takeuchi")
    print("   ", s.render(show=fam.render))


if __name__ == "__main__":
    show("path a-b-c in G", G, path_graph(list("abc")))
    show("triangle in SG", SG, complete_graph(3))
    show("U(2,3)", M, uniform(2, 3))
    show("partition ab|cde", PI, SetPartition.build([["a", "b"], ["c", "d", "e"]]))
    show("path abcd in F", F, PathSet.parse("abcd"))
    show("hypergraph {12,23,123}", HG, Hypergraph.parse(["1", "2", "3"], "{∅,12,23,123}"))
