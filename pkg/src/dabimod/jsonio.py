"""JSON serialization of bimodules, concrete cells, and basis monomials.

The bimodule format is shared by schema bimodules and computed products
(the latter carry integer exponents and an extra "bound" field):

    {"name": ..., "left_algebra": "B2", "right_algebra": "B2",
     "strictly_unital": true,
     "generators": [{"name", "left", "right"}, ...],
     "cells": [{"row", "col",
                "schemas": [{"output", "inputs", "indices",
                             "constraints", "exclusions"}, ...]}, ...]}

Exponent expressions appear as strings such as "k+1"; all lists are in
canonical order so identical inputs serialize to identical bytes.
"""

from __future__ import annotations

import json

from .boxtensor import ConcreteDABimodule
from .engine import ConcreteTerm, DABimodule, DAGenerator
from .schema import Constraints, MonomialPattern, TermSchema


def schema_to_json(s: TermSchema) -> dict:
    atoms, exclusions = s.constraints.render()
    return {
        "output": str(s.output),
        "inputs": [str(p) for p in s.inputs],
        "indices": list(s.vars),
        "constraints": atoms,
        "exclusions": exclusions,
    }


def schema_from_json(obj: dict) -> TermSchema:
    return TermSchema(
        MonomialPattern.parse(obj["output"]),
        tuple(MonomialPattern.parse(p) for p in obj.get("inputs", ())),
        Constraints.parse(
            "; ".join(obj.get("constraints", ())),
            "; ".join(obj.get("exclusions", ())),
        ),
    )


def _term_to_json(t: ConcreteTerm) -> dict:
    return {
        "output": str(t.output),
        "inputs": [str(b) for b in t.inputs],
        "indices": [],
        "constraints": [],
        "exclusions": [],
    }


def bimodule_to_json(bim: DABimodule) -> dict:
    cells = []
    order = {g.name: i for i, g in enumerate(bim.generators)}
    for (row, col) in sorted(bim.cells, key=lambda rc: (order[rc[0]], order[rc[1]])):
        cells.append(
            {
                "row": row,
                "col": col,
                "schemas": [schema_to_json(s) for s in bim.cells[(row, col)]],
            }
        )
    return {
        "name": bim.name,
        "left_algebra": bim.left_algebra,
        "right_algebra": bim.right_algebra,
        "strictly_unital": bim.strictly_unital,
        "generators": [
            {"name": g.name, "left": g.left, "right": g.right}
            for g in bim.generators
        ],
        "cells": cells,
    }


def bimodule_from_json(obj: dict) -> DABimodule:
    gens = tuple(
        DAGenerator(g["name"], g["left"], g["right"]) for g in obj["generators"]
    )
    cells = {}
    for cell in obj.get("cells", ()):
        cells[(cell["row"], cell["col"])] = tuple(
            schema_from_json(s) for s in cell["schemas"]
        )
    bim = DABimodule(
        obj.get("name", "bimodule"),
        gens,
        cells,
        obj.get("strictly_unital", True),
        obj.get("left_algebra", "B2"),
        obj.get("right_algebra", "B2"),
    )
    bim.validate()
    return bim


def concrete_to_json(M: ConcreteDABimodule) -> dict:
    cells = []
    order = {g.name: i for i, g in enumerate(M.generators)}
    for (row, col) in sorted(M.cells, key=lambda rc: (order[rc[0]], order[rc[1]])):
        terms = sorted(M.cells[(row, col)], key=ConcreteTerm.sort_key)
        cells.append(
            {"row": row, "col": col, "schemas": [_term_to_json(t) for t in terms]}
        )
    return {
        "name": M.name,
        "left_algebra": "B2",
        "right_algebra": "B2",
        "strictly_unital": True,
        "bound": M.bound,
        "generators": [
            {"name": g.name, "left": g.left, "right": g.right}
            for g in M.generators
        ],
        "cells": cells,
    }


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
