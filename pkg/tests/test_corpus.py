import json
from importlib import resources

import pytest

from dabimod.corpus import (
    CORPUS_IDS,
    build,
    is_zero_boxsquare,
    schema_cells_equal,
    symmetry_transform,
)
from dabimod.engine import check_da_relations
from dabimod.jsonio import bimodule_to_json
from dabimod.schema import schema


def test_generator_tables(corpus):
    P = corpus["P"]
    assert [g.name for g in P.generators] == [
        "S", "S_A", "W", "N", "E", "S_C",
        "N_AB", "E_AC", "S_AC", "W_AC", "N_BC", "N_ABC",
    ]
    assert P.generator("W").left == "B" and P.generator("W").right == "A"
    E1 = corpus["E1"]
    assert [(g.name, g.left, g.right) for g in E1.generators] == [
        ("X_1", "e", "A"), ("X_2", "B", "AB"), ("X_3", "C", "AC"), ("X_4", "BC", "ABC"),
    ]
    E2 = corpus["E2"]
    assert [(g.left, g.right) for g in E2.generators] == [
        ("e", "C"), ("A", "AC"), ("B", "BC"), ("AB", "ABC"),
    ]
    assert build("N").generators == P.generators
    with pytest.raises(ValueError):
        build("Q")


def test_known_cells(corpus):
    N = corpus["N"]
    want = schema("L1*U1^k", ["U2^(k+1)", "L1"]).canonical()
    assert want in {s.canonical() for s in N.schemas("S_A", "N")}
    P = corpus["P"]
    want = schema("R1*U1^k", ["R1", "U2^(k+1)"]).canonical()
    assert want in {s.canonical() for s in P.schemas("N", "S_A")}
    # the four A-infinity cells of the south column carry six families each
    for col in ("N_AB", "E_AC", "W_AC", "N_BC"):
        assert len(N.schemas("S_AC", col)) == 6
        assert len(P.schemas(col, "S_AC")) == 6


def test_symmetry_transform_matches_stored_n(corpus):
    assert schema_cells_equal(symmetry_transform(corpus["P"]), corpus["N"]) == []
    assert schema_cells_equal(symmetry_transform(corpus["N"]), corpus["P"]) == []


def test_symmetry_is_an_involution(corpus):
    for cid in ("P", "N"):
        twice = symmetry_transform(symmetry_transform(corpus[cid]))
        assert schema_cells_equal(twice, corpus[cid]) == []


def test_symmetry_on_individual_term(corpus):
    # the positive two-input family with output R1*U1^k maps to the
    # negative one with reversed inputs and swapped letters
    sym = symmetry_transform(corpus["P"])
    want = schema("L1*U1^k", ["U2^(k+1)", "L1"]).canonical()
    assert want in {s.canonical() for s in sym.schemas("S_A", "N")}


def test_da_relations_all_corpus(corpus):
    for cid, bim in corpus.items():
        assert check_da_relations(bim, 10).ok, cid


def test_zero_boxsquares():
    assert is_zero_boxsquare("E1")
    assert is_zero_boxsquare("E2")
    with pytest.raises(ValueError):
        is_zero_boxsquare("P")


def test_boxsquare_counterexample(corpus):
    # adding a generator with idempotents (A, e) to E1 creates composable
    # pairs, so the square of the mutated bimodule is no longer zero
    from dabimod.boxtensor import primary_product
    from dabimod.engine import DABimodule, DAGenerator

    mutated = DABimodule(
        "E1x",
        corpus["E1"].generators + (DAGenerator("Z", "A", "e"),),
        dict(corpus["E1"].cells),
    )
    assert primary_product(mutated, mutated) != []


def test_golden_files_in_sync(corpus):
    for cid in CORPUS_IDS:
        text = resources.files("dabimod.data").joinpath(f"{cid}.json").read_text()
        assert json.loads(text) == bimodule_to_json(corpus[cid]), (
            f"{cid}.json is stale; regenerate with "
            "python -m tests.regen_golden"
        )
