import random

import pytest

from dabimod.algebra import monomial, unit
from dabimod.engine import (
    ConcreteTerm,
    DABimodule,
    DAGenerator,
    check_da_relations,
    evaluate_delta,
    infer_bidegrees,
    instantiate_cell,
    scan_bidegrees,
)
from dabimod.schema import MalformedSchemaError, schema


def _terms(bim, row, col, bound, **kw):
    return {str(t) for t in instantiate_cell(bim, row, col, bound, **kw)}


def test_instantiate_e1_diagonal(corpus):
    got = _terms(corpus["E1"], "X_2", "X_2", 4)
    assert got == {
        "Id(B)*U1 (x) (Id(AB)*U1)",
        "Id(B)*U1^2 (x) (Id(AB)*U1^2)",
        "Id(B)*U2 (x) (Id(AB)*U2)",
        "Id(B)*U2^2 (x) (Id(AB)*U2^2)",
    }


def test_instantiate_empty_cell(corpus):
    assert instantiate_cell(corpus["E1"], "X_1", "X_2", 10) == set()


def test_instantiate_truncates_by_output_degree(corpus):
    got = _terms(corpus["P"], "N", "S_A", 3)
    assert got == {
        "R1 (x) (R1, Id(B)*U2)",
        "R1*U1 (x) (R1, Id(B)*U2^2)",
    }


def test_unital_closure_materializes_unit_terms(corpus):
    with_unit = _terms(corpus["E1"], "X_1", "X_1", 4, include_unital=True)
    assert with_unit == {"Id(e) (x) (Id(A))"}
    assert _terms(corpus["E1"], "X_1", "X_1", 4) == set()


def test_evaluate_delta_examples(corpus):
    E1, P = corpus["E1"], corpus["P"]
    assert evaluate_delta(E1, "X_2", [monomial("AB", "Id", 1, 0)]) == {
        (monomial("B", "Id", 1, 0), "X_2")
    }
    assert evaluate_delta(E1, "X_1", []) == set()
    # two-input action out of the south generator of the weight-1 block
    got = evaluate_delta(P, "S_A", [monomial("A", "R1"), monomial("B", "Id", 0, 1)])
    assert got == {(monomial("A", "R1"), "N")}
    # idempotent chaining failures are silently zero
    assert evaluate_delta(P, "N", [monomial("A", "R1"), monomial("B", "Id", 0, 1)]) == set()
    assert evaluate_delta(E1, "X_2", [monomial("AC", "Id", 1, 0)]) == set()


def test_strict_unitality(corpus):
    for bim in corpus.values():
        for g in bim.generators:
            assert evaluate_delta(bim, g.name, [unit(g.right)]) == {
                (unit(g.left), g.name)
            }
            other = "A" if g.right != "A" else "B"
            assert evaluate_delta(bim, g.name, [unit(other)]) == set()
            assert (
                evaluate_delta(bim, g.name, [unit(g.right), unit(g.right)]) == set()
            )


def test_evaluate_delta_agrees_with_instantiation(corpus):
    P = corpus["P"]
    rng = random.Random(7)
    cells = sorted(P.cells)
    for _ in range(200):
        row, col = cells[rng.randrange(len(cells))]
        terms = sorted(
            instantiate_cell(P, row, col, 8, output_only=False),
            key=ConcreteTerm.sort_key,
        )
        if not terms:
            continue
        probe = terms[rng.randrange(len(terms))]
        got = evaluate_delta(P, col, probe.inputs)
        assert (probe.output, row) in got


def test_check_da_relations_pass(corpus):
    for cid, bim in corpus.items():
        report = check_da_relations(bim, 10)
        assert report.ok, f"{cid}: {report.failures[:3]}"


def test_negative_control_locates_cell(corpus):
    # dropping the family whose smallest instance is L2 (x) (L2, U1)
    # breaks the relations by degree 6, with non-cancelling terms in the
    # south column itself by degree 8
    mutated = corpus["P"].drop_schema("N_AB", "S_AC", 5)
    report = check_da_relations(mutated, 6)
    assert not report.ok
    report = check_da_relations(mutated, 8)
    assert any(f.col == "S_AC" for f in report.failures)


def test_negative_control_all_star_families(corpus):
    for idx in range(6):
        mutated = corpus["P"].drop_schema("N_AB", "S_AC", idx)
        report = check_da_relations(mutated, 12)
        assert not report.ok, f"family {idx} is not load-bearing at degree 12"


def test_infer_bidegrees(corpus):
    res = infer_bidegrees(corpus["E1"])
    assert res.ok
    assert res.assignment["X_2"] == res.assignment["X_3"] == (0, 0)
    res = infer_bidegrees(corpus["P"])
    assert res.ok
    assert not scan_bidegrees(corpus["P"], res.assignment, 10)
    # the relative offsets of the weight-1 block are forced
    a = res.assignment
    assert a["N"][0] - a["S_A"][0] == 2
    assert a["N"][1] - a["S_A"][1] == 1


def test_infer_bidegrees_empty_bimodule():
    bim = DABimodule("point", (DAGenerator("x", "A", "A"),), {})
    res = infer_bidegrees(bim)
    assert res.ok and res.assignment == {"x": (0, 0)}


def test_infer_bidegrees_inconsistency_witness():
    gens = (DAGenerator("x", "A", "A"), DAGenerator("y", "A", "A"))
    cells = {
        ("x", "y"): (schema("U1", ["U1"]),),        # offset 0
        ("y", "x"): (schema("U1", ["U1^2"]),),      # offset +2
    }
    res = infer_bidegrees(DABimodule("bad", gens, cells))
    assert not res.ok and "inconsistent" in (res.witness or "")


def test_unbounded_family_rejected():
    gens = (DAGenerator("x", "A", "A"),)
    bim = DABimodule("loose", gens, {("x", "x"): (schema("U1", ["U1^(k+1)"]),)})
    with pytest.raises(MalformedSchemaError):
        list(instantiate_cell(bim, "x", "x", 6))
    bad = DABimodule("free", gens, {("x", "x"): (schema("U1^(k+1)", ["U1"]),)})
    with pytest.raises(MalformedSchemaError):
        bad.validate()


def test_validation_rejects_bad_chaining():
    gens = (DAGenerator("x", "A", "B"),)
    bim = DABimodule("chain", gens, {("x", "x"): (schema("L1"),)})
    with pytest.raises(MalformedSchemaError):
        bim.validate()
