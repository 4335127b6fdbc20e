"""JSON loading for every family, plus the family and character registries."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Callable

from .errors import InputError
from .submodular import INF, BooleanFn


def _require(data: dict, key: str):
    if key not in data:
        raise InputError(f"missing field {key!r}")
    return data[key]


def _labels(xs) -> list[str]:
    if not isinstance(xs, list):
        raise InputError("expected a list of labels")
    out = [str(x) for x in xs]
    if len(set(out)) != len(out):
        raise InputError("repeated label")
    return out


def _sets(xs) -> list[list[str]]:
    if not isinstance(xs, list):
        raise InputError("expected a list of sets")
    return [[str(a) for a in s] for s in xs]


def parse_value(v):
    if isinstance(v, str):
        if v.strip().lower() in ("inf", "infinity", "+inf"):
            return INF
        try:
            return Fraction(v)
        except ValueError:
            raise InputError(f"bad number {v!r}") from None
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InputError(f"bad number {v!r}")
    if isinstance(v, float):
        if v == float("inf"):
            return INF
        return Fraction(v).limit_denominator()
    return Fraction(v)


def load_boolean_fn(data: dict) -> BooleanFn:
    from .buildsets import loday_fn
    from .submodular import permutahedron, simplex

    preset = data.get("preset")
    if preset == "permutahedron":
        n = data.get("n")
        return permutahedron(_labels(data["ground"]) if "ground" in data else int(n))
    if preset == "loday":
        return loday_fn(_labels(_require(data, "order")))
    if preset == "simplex":
        return simplex(_labels(_require(data, "ground")), _labels(_require(data, "face")))
    if preset is not None:
        raise InputError(f"unknown preset {preset!r}")
    ground = _labels(_require(data, "ground"))
    pairs = []
    for item in _require(data, "values"):
        if not isinstance(item, list) or len(item) != 2:
            raise InputError("values must be [subset, value] pairs")
        pairs.append(([str(a) for a in item[0]], parse_value(item[1])))
    return BooleanFn.from_pairs(ground, pairs)


def load_graph(data: dict, simple: bool):
    from .graphs import Graph, SimpleGraph

    cls = SimpleGraph if simple else Graph
    return cls.build(_labels(_require(data, "vertices")), _sets(data.get("edges", [])))


def load_matroid(data: dict):
    from .matroids import Matroid, uniform

    if "uniform" in data:
        r, n = data["uniform"]
        return uniform(int(r), _labels(data["ground"]) if "ground" in data else int(n))
    return Matroid.build(_labels(_require(data, "ground")), _sets(_require(data, "bases")))


def load_poset(data: dict):
    from .posets import Poset

    return Poset.build(_labels(_require(data, "ground")), _sets(data.get("relations", [])))


def load_partition(data: dict):
    from .buildsets import SetPartition

    return SetPartition.build(_sets(_require(data, "blocks")))


def load_paths(data: dict):
    from .buildsets import PathSet

    return PathSet([list(map(str, p)) if isinstance(p, list) else list(p) for p in _require(data, "paths")])


def load_hypergraph(data: dict, kind: str):
    from .buildsets import BuildingSet
    from .hypergraphs import Hypergraph, SimpleHypergraph, SimplicialComplex

    ground = _labels(_require(data, "ground"))
    if kind == "simplicial-complex":
        return SimplicialComplex.from_facets(ground, _sets(_require(data, "facets")))
    if kind == "building-set":
        return BuildingSet.build(ground, _sets(_require(data, "sets")))
    cls = Hypergraph if kind == "hypergraph" else SimpleHypergraph
    return cls.build(ground, _sets(data.get("edges", [])))


def load_linear_order(data: dict):
    from .buildsets import LinearOrder

    return LinearOrder(_labels(_require(data, "order")))


def _families() -> dict[str, tuple[Any, Callable[[dict], Any]]]:
    from .buildsets import BS, F, L, PI, W
    from .graphs import G, SG
    from .hypergraphs import HG, SC, SHG
    from .matroids import M
    from .posets import P
    from .submodular import GP

    return {
        "gp": (GP, load_boolean_fn),
        "graph": (G, lambda d: load_graph(d, False)),
        "simple-graph": (SG, lambda d: load_graph(d, True)),
        "matroid": (M, load_matroid),
        "poset": (P, load_poset),
        "partition": (PI, load_partition),
        "paths": (F, load_paths),
        "hypergraph": (HG, lambda d: load_hypergraph(d, "hypergraph")),
        "simple-hypergraph": (SHG, lambda d: load_hypergraph(d, "simple-hypergraph")),
        "building-set": (BS, lambda d: load_hypergraph(d, "building-set")),
        "ripping-sewing": (W, lambda d: load_graph(d, True)),
        "simplicial-complex": (SC, lambda d: load_hypergraph(d, "simplicial-complex")),
        "linear-order": (L, load_linear_order),
    }


ALIASES = {
    "submodular": "gp",
    "set-partition": "partition",
    "path": "paths",
    "w": "ripping-sewing",
    "sc": "simplicial-complex",
    "bs": "building-set",
    "hg": "hypergraph",
    "shg": "simple-hypergraph",
}


def family_names() -> list[str]:
    return sorted(_families())


def resolve_family(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in _families():
        raise InputError(f"unknown family {name!r}; known: {', '.join(family_names())}")
    return name


def load_object(family: str, data: dict | str):
    """Returns (family object, structure)."""
    if isinstance(data, str):
        data = parse_json(data)
    if not isinstance(data, dict):
        raise InputError("object JSON must be a mapping")
    if family is None:
        family = _require(data, "family")
    fam, loader = _families()[resolve_family(family)]
    return fam, loader(data)


def parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from None


def read_source(arg: str) -> str:
    """Inline JSON, or '@path' / a path to a file holding it."""
    s = arg.strip()
    if s.startswith("{") or s.startswith("["):
        return s
    path = s[1:] if s.startswith("@") else s
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def load_series(data: dict):
    from .series import ExpSeries, OrdSeries

    kind = _require(data, "kind")
    coeffs = [parse_value(c) for c in _require(data, "coeffs")]
    if any(c == INF for c in coeffs):
        raise InputError("series coefficients must be finite")
    if kind == "egf":
        return ExpSeries(coeffs)
    if kind == "ogf":
        return OrdSeries(coeffs)
    raise InputError(f"unknown series kind {kind!r}")


# -- characters -----------------------------------------------------------------

def characters(family: str) -> dict[str, Any]:
    from .graphs import chromatic_character
    from .matroids import loopless_character, single_basis_character
    from .posets import antichain_character
    from .submodular import basic_character

    table = {
        "graph": {"chromatic": chromatic_character},
        "simple-graph": {"chromatic": chromatic_character},
        "matroid": {"bjr": single_basis_character, "loopless": loopless_character},
        "poset": {"order": antichain_character},
        "gp": {"basic": basic_character},
    }
    return table.get(resolve_family(family), {})


def reciprocity_counter(family: str, character: str):
    """Brute-force count for (-1)^|I| chi(-n), or None."""
    from .graphs import count_compatible_pairs
    from .matroids import _weightings, _y_max_bases
    from .posets import count_weak_maps
    from .submodular import face_vertices, maxface_composition, _weightings as gp_weightings

    def bjr(m, n):
        return sum(_y_max_bases(m, y) for y in _weightings(len(m.labels), n))

    def basic(z, n):
        return sum(len(face_vertices(z, maxface_composition(z, y))) for y in gp_weightings(len(z.labels), n))

    table = {
        ("graph", "chromatic"): count_compatible_pairs,
        ("simple-graph", "chromatic"): count_compatible_pairs,
        ("poset", "order"): count_weak_maps,
        ("matroid", "bjr"): bjr,
        ("gp", "basic"): basic,
    }
    return table.get((resolve_family(family), character))
