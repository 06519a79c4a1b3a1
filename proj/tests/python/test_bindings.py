from fractions import Fraction

import pytest

import isotropy


def test_dimensions():
    assert isotropy.dim((2, 1), 3) == 8
    assert isotropy.dim("2,1", 3) == 8
    assert isotropy.dim([1, 1, 1], 5) == 10
    assert isotropy.dim("5,5,5,5", 30) == 320242369285783296
    assert isotropy.dim([], 4) == 1


def test_three_dimension_paths_agree():
    for lam in ["3,2,1", "4,1", "2,2,2", "1,1,1,1"]:
        for n in range(0, 7):
            a = isotropy.hook_content(lam, n)
            assert a == isotropy.recurrence(lam, n) == isotropy.count_ssyt(lam, n)


def test_partition_helpers():
    assert isotropy.parse_partition(" 3, 1 ") == (3, 1)
    strips = [tuple(p) for p in isotropy.horizontal_strip_predecessors("2,1")]
    assert strips == [(2, 1), (2,), (1, 1), (1,)]
    weights = [tuple(w) for w in isotropy.weight_vectors("2,1", 3)]
    assert len(weights) == 8
    assert all(sum(w) == 3 for w in weights)


def test_oracle_and_decide_examples():
    c = isotropy.top_chern_nonzero("1,1,1", 5, 7)
    assert c["nonzero"] is False
    assert c["degree"] == 10
    assert c["surviving"] == {}

    c = isotropy.top_chern_nonzero("2,1", 3, 6)
    assert c["nonzero"] is True
    assert c["surviving"] == {(3, 3, 2): 105}

    v = isotropy.decide("2,1", 3, 6)
    assert v["isotropic"] is True
    assert v["rule"] == "main-theorem"
    assert v["threshold_n"] == 6

    v = isotropy.decide("1,1,1", 5, 7)
    assert v["isotropic"] is False
    assert v["rule"] == "exception-skew-3-n7"
    assert v["threshold_n"] is None


def test_lines_on_cubic_surface():
    assert isotropy.top_chern_nonzero("3", 2, 4)["surviving"] == {(2, 2): 27}


def test_schur_expansion_sums_to_evaluation():
    e = isotropy.schur_expand_product("2,1", 3)
    assert sum(c * isotropy.dim(mu, 3) for mu, c in e.items()) == 3**8


def test_inequalities_and_proof_chain():
    r = isotropy.tevelev_inequalities("2,1", 3, 6)
    assert [(row["lhs"], row["rhs"]) for row in r["rows"]] == [(8, 9), (2, 4), (0, 1), (0, 0)]
    assert r["all_hold"]
    chain = isotropy.proof_chain("2,2", 4, 9)
    assert chain["terminal_case"] == "rectangle"
    first = chain["steps"][0]
    assert first["lhs"] == 9 and first["rhs"] == Fraction(9)
    assert isotropy.threshold_n("2,2", 4) == 9


def test_cross_validate():
    cv = isotropy.cross_validate("2,2", 3, 7)
    assert cv["agree"]
    assert cv["decision"]["isotropic"]


def test_errors_are_value_errors():
    with pytest.raises(isotropy.IsotropyError, match="EmptyPartition"):
        isotropy.decide([], 3, 4)
    with pytest.raises(ValueError, match="NotWeaklyDecreasing"):
        isotropy.dim("1,2", 3)
    with pytest.raises(isotropy.IsotropyError, match="InvalidRange"):
        isotropy.proof_chain("2,2", 4, 6)
    with pytest.raises(isotropy.IsotropyError, match="ZeroBundle"):
        isotropy.top_chern_nonzero("1,1,1,1", 3, 5)
