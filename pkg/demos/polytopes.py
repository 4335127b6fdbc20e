"""Face enumeration for a few generalized permutahedra.

Run: python3 demos/polytopes.py
"""

from collections import Counter

from hopfcalc.buildsets import loday_fn
from hopfcalc.matroids import rank_fn, uniform
from hopfcalc.posets import Poset, lower_fn
from hopfcalc.submodular import enumerate_faces, f_vector, permutahedron


def describe(name, z):
    faces = enumerate_faces(z)
    if z.extended:
        # an unbounded cone: faces have no vertex lists
        print(f"{name}: {len(faces)} faces, f-vector {f_vector(faces)}")
        return
    two = Counter(len(r.vertices) for r in faces if r.dim == 2)
    print(f"{name}: {len(faces)} faces, f-vector {f_vector(faces)}, 2-faces by vertex count {dict(sorted(two.items()))}")


if __name__ == "__main__":
    describe("permutahedron, n=4", permutahedron(4))
    describe("associahedron, n=4", loday_fn(list("abcd")))
    describe("matroid polytope of U(2,4)", rank_fn(uniform(2, 4)))
    describe("cone of the diamond poset", lower_fn(Poset.build("abcd", [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]])))
