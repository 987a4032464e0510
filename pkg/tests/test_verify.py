from dabimod.boxtensor import secondary_product
from dabimod.engine import check_da_relations
from dabimod.verify import (
    find_isomorphism,
    invert_bijection,
    report_to_json_text,
    run_reproduction,
    verify_one_morphism,
)

EXPECTED_E1P = {
    "(X_1,S_A)": "(S,X_1)",
    "(X_2,N_AB)": "(N,X_2)",
    "(X_2,E_AC)": "(E,X_3)",
    "(X_3,S_AC)": "(S_C,X_3)",
    "(X_4,N_ABC)": "(N_BC,X_4)",
}

EXPECTED_E2P = {
    "(Y_1,S_C)": "(S,Y_1)",
    "(Y_2,S_AC)": "(S_A,Y_2)",
    "(Y_3,W_AC)": "(W,Y_2)",
    "(Y_3,N_BC)": "(N,Y_3)",
    "(Y_4,N_ABC)": "(N_AB,Y_4)",
}


def test_find_isomorphism_e1p(corpus):
    ep = secondary_product(corpus["E1"], corpus["P"], 10)
    pe = secondary_product(corpus["P"], corpus["E1"], 10)
    phi = find_isomorphism(ep, pe)
    assert phi == EXPECTED_E1P


def test_bijections_pair_generators_positionally(corpus):
    # the relabelings pair generators block by block, for both crossings
    for crossing, expected in (("P", EXPECTED_E1P), ("N", EXPECTED_E1P)):
        ex = secondary_product(corpus["E1"], corpus[crossing], 8)
        xe = secondary_product(corpus[crossing], corpus["E1"], 8)
        assert find_isomorphism(ex, xe) == expected
    for crossing in ("P", "N"):
        ex = secondary_product(corpus["E2"], corpus[crossing], 8)
        xe = secondary_product(corpus[crossing], corpus["E2"], 8)
        assert find_isomorphism(ex, xe) == EXPECTED_E2P


def test_find_isomorphism_rejects_mismatched_idempotents(corpus):
    ep1 = secondary_product(corpus["E1"], corpus["P"], 8)
    ep2 = secondary_product(corpus["E2"], corpus["P"], 8)
    assert find_isomorphism(ep1, ep2) is None


def test_find_isomorphism_identity(corpus):
    ep = secondary_product(corpus["E1"], corpus["P"], 8)
    phi = find_isomorphism(ep, ep)
    assert phi == {g.name: g.name for g in ep.generators}


def test_bijection_inverts(corpus):
    ep = secondary_product(corpus["E1"], corpus["N"], 8)
    ne = secondary_product(corpus["N"], corpus["E1"], 8)
    phi = find_isomorphism(ep, ne)
    assert phi is not None
    assert find_isomorphism(ne, ep) == invert_bijection(phi)


def test_bijections_stable_under_bound_increase(corpus):
    for b in (4, 6, 8):
        small = find_isomorphism(
            secondary_product(corpus["E2"], corpus["P"], b),
            secondary_product(corpus["P"], corpus["E2"], b),
        )
        large = find_isomorphism(
            secondary_product(corpus["E2"], corpus["P"], b + 2),
            secondary_product(corpus["P"], corpus["E2"], b + 2),
        )
        assert small == large is not None


def test_verify_one_morphism_all_pairs():
    for crossing in ("P", "N"):
        for action in ("E1", "E2"):
            report = verify_one_morphism(crossing, action, 8)
            assert report.verified, (crossing, action)
            assert report.zero_square


def test_verify_one_morphism_degenerate_bound():
    report = verify_one_morphism("P", "E1", 0)
    assert report.verified
    assert report.low_confidence
    assert any("warning" in line for line in report.lines())


def test_run_reproduction_small_bound():
    report = run_reproduction(6)
    assert report.ok
    assert "warning" not in report.summary()
    low = run_reproduction(2)
    assert low.ok
    assert "truncation" in low.summary()
    names = {c.name for c in report.checks}
    assert "da-relations/P" in names and "box-product/E1(x)P" in names
    assert len(report.bijections) == 4
    assert set(report.bidegrees) == {"P", "N", "E1", "E2"}


def test_reproduction_json_is_deterministic():
    a = report_to_json_text(run_reproduction(6))
    b = report_to_json_text(run_reproduction(6))
    assert a == b


def test_mutated_corpus_isolated_by_checker(corpus):
    mutated = corpus["P"].drop_schema("N_AB", "S_AC", 0)
    report = check_da_relations(mutated, 10)
    assert not report.ok
    cols = {f.col for f in report.failures}
    assert "S_AC" in cols
    # the damage stays inside the cells the dropped family interacts with
    assert cols <= {"S_AC", "E_AC", "W_AC"}
    assert {f.row for f in report.failures} <= {"N_AB", "E_AC", "W_AC", "N_BC", "S_AC"}
