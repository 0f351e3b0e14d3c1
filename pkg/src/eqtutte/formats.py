"""JSON encodings for matroids, graphs, polynomials, fractions and signed combinations."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .matroid import Graph, Matroid, graphic, matroid_from_bases
from .poly import MultiPoly, PolyFraction
from .valuation import SignedCombination


class FormatError(ValueError):
    pass


def parse_rational(text: str | int) -> int | Fraction:
    """Exact rational from ``"p/q"``, ``"p"`` or an int; floats are rejected."""
    if isinstance(text, bool) or isinstance(text, float):
        raise FormatError(f"not an exact rational: {text!r}")
    if isinstance(text, int):
        return text
    s = str(text).strip()
    if any(ch in s for ch in ".eE"):
        raise FormatError(f"not an exact rational: {text!r}")
    try:
        value = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"not an exact rational: {text!r}") from exc
    return int(value) if value.denominator == 1 else value


def rational_text(value) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


# matroids and graphs


def matroid_to_json(M: Matroid) -> dict:
    return {"ground": list(M.ground), "bases": [list(b) for b in M.basis_labels()]}


def matroid_from_json(obj: Any) -> Matroid:
    if not isinstance(obj, dict) or "ground" not in obj or "bases" not in obj:
        raise FormatError("matroid JSON needs 'ground' and 'bases'")
    ground = obj["ground"]
    bases = obj["bases"]
    if not isinstance(ground, list) or not isinstance(bases, list):
        raise FormatError("'ground' and 'bases' must be lists")
    if any(not isinstance(g, str) for g in ground):
        raise FormatError("labels must be strings")
    return matroid_from_bases(ground, bases)


def graph_to_json(G: Graph) -> dict:
    return {
        "vertices": list(G.vertices),
        "edges": [{"label": e.label, "ends": [e.u, e.v]} for e in G.edges],
    }


def graph_from_json(obj: Any) -> Graph:
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise FormatError("graph JSON needs 'vertices' and 'edges'")
    edges = []
    for item in obj["edges"]:
        try:
            u, v = item["ends"]
            edges.append((item["label"], u, v))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad edge entry {item!r}") from exc
    return Graph.build(obj["vertices"], edges)


def matroid_or_graph_from_json(obj: Any) -> tuple[Matroid, Graph | None]:
    """A matroid, or the cycle matroid of a graph together with the graph."""
    if isinstance(obj, dict) and "vertices" in obj:
        G = graph_from_json(obj)
        return graphic(G), G
    return matroid_from_json(obj), None


# polynomials


def poly_to_json(p: MultiPoly, ground: Sequence[str] | None = None) -> list[dict]:
    return [
        {"coeff": rational_text(c), "monomial": dict(exps)}
        for exps, c in p.sorted_terms(ground)
    ]


def poly_from_json(obj: Any) -> MultiPoly:
    if not isinstance(obj, list):
        raise FormatError("polynomial JSON must be a list of terms")
    terms = []
    for item in obj:
        if not isinstance(item, dict) or "coeff" not in item or "monomial" not in item:
            raise FormatError(f"bad term {item!r}")
        mono = item["monomial"]
        if not isinstance(mono, dict) or any(not isinstance(e, int) or e < 0 for e in mono.values()):
            raise FormatError(f"bad monomial {mono!r}")
        terms.append((parse_rational(item["coeff"]), mono))
    try:
        return MultiPoly.from_terms(terms)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def fraction_to_json(f: PolyFraction, ground: Sequence[str] | None = None) -> dict:
    return {"num": poly_to_json(f.num, ground), "den": poly_to_json(f.den, ground)}


def fraction_from_json(obj: Any) -> PolyFraction:
    if not isinstance(obj, dict) or "num" not in obj or "den" not in obj:
        raise FormatError("fraction JSON needs 'num' and 'den'")
    return PolyFraction(poly_from_json(obj["num"]), poly_from_json(obj["den"]))


def fraction_text(f: PolyFraction, ground: Sequence[str] | None = None) -> str:
    return f"({f.num.to_text(ground)}) / ({f.den.to_text(ground)})"


# signed combinations


def combination_to_json(c: SignedCombination) -> dict:
    return {
        "rank": c.rank,
        "ground": list(c.ground),
        "terms": [{"coeff": coeff, "matroid": matroid_to_json(M)} for coeff, M in c.terms],
    }


def combination_from_json(obj: Any) -> SignedCombination:
    if not isinstance(obj, dict) or not {"rank", "ground", "terms"} <= set(obj):
        raise FormatError("combination JSON needs 'rank', 'ground' and 'terms'")
    terms = []
    for item in obj["terms"]:
        coeff = item.get("coeff")
        if not isinstance(coeff, int) or isinstance(coeff, bool):
            raise FormatError("combination coefficients must be integers")
        terms.append((coeff, matroid_from_json(item["matroid"])))
    return SignedCombination(tuple(obj["ground"]), int(obj["rank"]), tuple(terms))


def load_json(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2)
