import pytest

from dabimod.boxtensor import (
    check_concrete,
    diff_concrete,
    instantiate_reference,
    primary_product,
    secondary_product,
)
from dabimod.corpus import PRODUCT_PAIRS, reference_product
from dabimod.engine import ConcreteTerm, DABimodule


def _cell(prod, row, col):
    return {str(t) for t in prod.terms(row, col)}


def test_primary_products(corpus):
    gens = primary_product(corpus["E1"], corpus["P"])
    by_idem = {(g.left, g.right): g.name for g in gens}
    assert by_idem[("B", "AB")] == "(X_2,N_AB)"
    assert by_idem[("e", "A")] == "(X_1,S_A)"
    assert len(gens) == 5

    assert primary_product(corpus["E1"], corpus["E1"]) == []
    assert primary_product(corpus["E2"], corpus["E2"]) == []

    gens = primary_product(corpus["P"], corpus["E1"])
    assert {g.name for g in gens if (g.left, g.right) == ("e", "A")} == {"(S,X_1)"}


def test_secondary_product_cells(corpus):
    prod = secondary_product(corpus["E1"], corpus["P"], 5)
    got = _cell(prod, "(X_2,E_AC)", "(X_2,N_AB)")
    assert got == {"Id(B)*U1 (x) (R2)", "Id(B)*U1^2 (x) (R2*U2)"}

    # at bound 3 the family R1*U1^k (x) (R1, U2^(k+1)) contributes its
    # k = 0 and k = 1 instances (output degrees 1 and 3)
    prod = secondary_product(corpus["E2"], corpus["P"], 3)
    got = _cell(prod, "(Y_3,N_BC)", "(Y_2,S_AC)")
    assert got == {"R1 (x) (R1, Id(BC)*U2)", "R1*U1 (x) (R1, Id(BC)*U2^2)"}


def test_pure_terms_pass_through(corpus):
    prod = secondary_product(corpus["P"], corpus["E2"], 6)
    assert _cell(prod, "(S_A,Y_2)", "(W,Y_2)") == {"L1"}
    prod = secondary_product(corpus["E1"], corpus["P"], 6)
    assert _cell(prod, "(X_3,S_AC)", "(X_2,E_AC)") == {"R2"}


def test_product_with_zero_bimodule(corpus):
    zero = DABimodule("zero", (), {})
    prod = secondary_product(corpus["E1"], zero, 8)
    assert prod.generators == () and prod.cells == {}


def test_unreachable_generator_is_irrelevant(corpus):
    # E1's right idempotents never hit the generators of P living over
    # B, C or BC on the left, so removing one cannot change E1 (x) P
    P = corpus["P"]
    gens = tuple(g for g in P.generators if g.name != "W")
    cells = {
        (r, c): s for (r, c), s in P.cells.items() if "W" not in (r, c)
    }
    pruned = DABimodule("P-pruned", gens, cells)
    full = secondary_product(corpus["E1"], P, 8)
    less = secondary_product(corpus["E1"], pruned, 8)
    assert diff_concrete(full, less) == []


def test_all_products_match_reference_tables(corpus):
    for a, b in PRODUCT_PAIRS:
        prod = secondary_product(corpus[a], corpus[b], 8)
        ref = instantiate_reference(reference_product(a, b), 8)
        assert diff_concrete(prod, ref) == [], f"{a}(x){b}"


def test_products_satisfy_relations_within_slack(corpus):
    for a, b in PRODUCT_PAIRS:
        prod = secondary_product(corpus[a], corpus[b], 8)
        report = check_concrete(prod, 6)
        assert report.ok, f"{a}(x){b}: {report.failures[:3]}"


def test_restriction_agrees_with_rebuild(corpus):
    big = secondary_product(corpus["E1"], corpus["P"], 12)
    small = secondary_product(corpus["E1"], corpus["P"], 8)
    assert diff_concrete(big.restricted(8), small) == []
    with pytest.raises(ValueError):
        small.restricted(12)


def test_unit_terms_are_implicit(corpus):
    prod = secondary_product(corpus["E1"], corpus["P"], 8)
    from dabimod.algebra import unit

    for g in prod.generators:
        unit_term = ConcreteTerm(unit(g.left), (unit(g.right),))
        assert unit_term not in prod.terms(g.name, g.name)
